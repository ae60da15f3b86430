//! Values frozen from an independent brute-force implementation (plain
//! Python, its own closure rules and a symbolic determinant), compared
//! against the library.

use num_bigint::BigInt;
use zfforge::constructions::{regular_construction, shrikhande_graph};
use zfforge::forcing::{zero_forcing_number, Rule};
use zfforge::graph::{is_isomorphic, named_graph, parse_graph6};
use zfforge::spectra::{char_poly, MatrixKind};

fn z(spec: &str, rule: Rule) -> usize {
    zero_forcing_number(&named_graph(spec).unwrap(), rule).unwrap().value
}

#[test]
fn forcing_numbers_of_the_small_pairs() {
    let table = [
        ("fig1_left", [6, 4, 5]),
        ("fig1_right", [4, 4, 4]),
        ("ex32_G", [3, 3, 3]),
        ("ex32_Gprime", [2, 1, 1]),
    ];
    for (spec, [standard, skew, psd]) in table {
        assert_eq!(z(spec, Rule::Standard), standard, "{spec}");
        assert_eq!(z(spec, Rule::Skew), skew, "{spec}");
        assert_eq!(z(spec, Rule::Psd), psd, "{spec}");
    }
}

#[test]
fn adjacency_polynomials() {
    let fig1 = [1, 0, -20, -16, 110, 136, -180, -320, 9, 200, 80];
    let ex32 = [1, 0, -6, 0, 9, 0, -4, 0];
    for (spec, want) in [
        ("fig1_left", &fig1[..]),
        ("fig1_right", &fig1[..]),
        ("ex32_G", &ex32[..]),
        ("ex32_Gprime", &ex32[..]),
    ] {
        let got = char_poly(&named_graph(spec).unwrap(), MatrixKind::Adjacency).coeffs();
        let want: Vec<BigInt> = want.iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(got, want, "{spec}");
    }
}

#[test]
fn regular_pair_for_k_two() {
    let pair = regular_construction(2).unwrap();
    assert_eq!(zero_forcing_number(&pair.g, Rule::Standard).unwrap().value, 6);
    assert_eq!(zero_forcing_number(&pair.g_prime, Rule::Standard).unwrap().value, 5);
}

#[test]
fn rook_graph_and_its_switch() {
    let shrikhande = shrikhande_graph().unwrap();
    let oracle = parse_graph6("OJ?tSsKoIqQmBIoEsoZT_").unwrap();
    assert!(is_isomorphic(&shrikhande, &oracle));
    assert_eq!(zero_forcing_number(&shrikhande, Rule::Psd).unwrap().value, 9);
    assert_eq!(z("grid_lattice:4", Rule::Psd), 10);
}
