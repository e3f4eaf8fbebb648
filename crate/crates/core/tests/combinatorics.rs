mod common;

use tlgsb::combinatorics::{
    catalan_entry, catalan_triangle_poly, dyck_paths, fc_words, group_oracle_check, monomial_to_path,
    packet_decomposition, passes_through, path_to_monomial, DyckPathG, PacketSummary,
};
use tlgsb::presentations::{dimension, standard_monomials, Family, StdMonomial};

use common::*;

#[test]
fn catalan_triangle_matches_lattice_count() {
    for n in 0..=12 {
        for k in 0..=n {
            assert_eq!(catalan_entry(n, k).unwrap(), ballot(n, k), "C({n},{k})");
        }
    }
    for n in 1..=7 {
        let paths = dyck_paths(n);
        assert_eq!(paths.len() as u128, catalan(n as u128));
        for k in 0..=n {
            let through = paths.iter().filter(|p| passes_through(p, (n, k))).count() as u128;
            assert_eq!(through, ballot(n, k));
        }
    }
}

#[test]
fn triangle_poly_and_dimensions() {
    for n in 2..=6 {
        for d in 2..=5u64 {
            assert_eq!(catalan_triangle_poly(n, n - 1, d).unwrap(), triangle_poly(n, n - 1, d as u128));
            let f = Family::gd1n(d as usize, n).unwrap();
            assert_eq!(dimension(&f).unwrap(), oracle_dimension(d as usize, n));
            assert_eq!(fc_words(d as usize, n).unwrap().len() as u128, oracle_dimension(d as usize, n));
        }
    }
    // dim T(d,3) = d^3 + 2d^2 + 6d - 4
    for d in 2..=6u128 {
        assert_eq!(oracle_dimension(d as usize, 3), d * d * d + 2 * d * d + 6 * d - 4);
    }
}

#[test]
fn packets_over_grid() {
    for d in 2..=4usize {
        for n in 2..=5usize {
            let packets = packet_decomposition(d, n).unwrap();
            assert_eq!(packets.len(), n + 1);
            let total: usize = packets.iter().flat_map(|p| &p.collections).map(|c| c.members.len()).sum();
            assert_eq!(total as u128, oracle_dimension(d, n));
            let json = serde_json::to_string(&packets).unwrap();
            let back: Vec<PacketSummary> = serde_json::from_str(&json).unwrap();
            assert_eq!(back, packets.iter().map(|p| p.summary()).collect::<Vec<_>>());
        }
    }
}

#[test]
fn paths_over_grid() {
    for d in 2..=4usize {
        for n in 2..=5usize {
            for m in standard_monomials(&Family::gd1n(d, n).unwrap()) {
                if !matches!(m, StdMonomial::Plus { .. }) {
                    continue;
                }
                let p = monomial_to_path(&m, d, n).unwrap();
                p.validate().unwrap();
                let json = serde_json::to_string(&p).unwrap();
                let back: DyckPathG = serde_json::from_str(&json).unwrap();
                assert_eq!(path_to_monomial(&back).unwrap(), m);
            }
        }
    }
}

#[test]
fn oracle_points() {
    for (d, n) in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4)] {
        let r = group_oracle_check(d, n).unwrap();
        assert!(r.passed, "({d},{n})");
        assert_eq!(r.fc_words as u128, oracle_dimension(d, n));
    }
    assert!(group_oracle_check(3, 4).is_err());
    assert!(group_oracle_check(4, 2).is_err());
}
