mod common;

use hypgrowth::boundary::{enumerate_rays, boundary_separated_count, BoundaryMetricParams};
use hypgrowth::cayley::{enumerate_ball, BallIndex, Budget, Strategy};
use hypgrowth::group::GroupSpec;
use hypgrowth::hyperbolicity::HypConstants;
use hypgrowth::num::{HalfInt, Rational};

use common::*;

#[test]
fn surface_spheres_match_dehn_oracle() {
    let idx = enumerate_ball(&GroupSpec::surface(2).unwrap(), 4, Budget::unlimited()).unwrap();
    let oracle = surface_sphere_counts(2, 4);
    assert_eq!(oracle, vec![1, 8, 56, 392, 2736]);
    assert_eq!(idx.sphere_counts(), oracle);
}

#[test]
fn surface_elements_agree_with_dehn_oracle() {
    // Two words land on the same id exactly when the oracle calls them equal.
    let spec = GroupSpec::surface(2).unwrap();
    let idx = enumerate_ball(&spec, 4, Budget::unlimited()).unwrap();
    let dehn = Dehn::surface(2);
    let words: Vec<Vec<L>> = (0..=2).flat_map(|n| reduced_words(4, n)).collect();
    let ids: Vec<u32> = words
        .iter()
        .map(|w| idx.lookup(&to_text(w).parse().unwrap()).unwrap())
        .collect();
    for i in 0..words.len() {
        for j in i..words.len() {
            assert_eq!(ids[i] == ids[j], dehn.equal(&words[i], &words[j]), "{} {}", to_text(&words[i]), to_text(&words[j]));
        }
    }
}

fn tree_setup(radius: usize) -> (BallIndex, HypConstants) {
    let idx = enumerate_ball(&GroupSpec::free(2).unwrap(), radius, Budget::unlimited()).unwrap();
    let c = HypConstants::new(HalfInt::ZERO, Rational::from_integer(2), Rational::from_integer(0)).unwrap();
    (idx, c)
}

/// Every `(depth ≤ 5, n ≤ 2, η, θ)` count checked against the lcp oracle.
pub fn check_free_boundary_oracle(depths: std::ops::RangeInclusive<usize>) {
    let (idx, c) = tree_setup(8);
    for depth in depths {
        let rays = enumerate_rays(&idx, depth, 1).unwrap();
        let words = reduced_words(2, depth);
        assert_eq!(rays.len(), words.len());
        let texts: Vec<String> = rays.iter().map(|r| r.word(&idx).to_string()).collect();
        let ray_words: Vec<Vec<L>> = texts
            .iter()
            .map(|t| {
                t.chars()
                    .map(|ch| {
                        let g = (ch.to_ascii_lowercase() as u8 - b'a' + 1) as L;
                        if ch.is_ascii_lowercase() { g } else { -g }
                    })
                    .collect()
            })
            .collect();
        for n in 0..=2 {
            let m = free_min_products(2, n, &ray_words);
            for eta in [0.5, 1.0] {
                let params = BoundaryMetricParams::new(eta, HalfInt::ZERO).unwrap();
                let mut thetas: Vec<f64> = (0..6).map(|j| (-eta * (j as f64 + 0.5)).exp()).collect();
                thetas.extend([1.0, 1.5, 0.01]);
                for theta in thetas {
                    let (sep, span) = free_boundary_counts(&m, eta, theta);
                    let rep = boundary_separated_count(&rays, n, theta, &idx, &params, &c, Strategy::Greedy).unwrap();
                    let row = &rep.rows[0];
                    assert_eq!(row.ambiguous, 0);
                    assert_eq!(row.certified_separated, sep, "depth {depth} n {n} eta {eta} theta {theta}");
                    assert_eq!(row.spanning, span, "depth {depth} n {n} eta {eta} theta {theta}");
                    if rays.len() <= 200 {
                        let exact = boundary_separated_count(&rays, n, theta, &idx, &params, &c, Strategy::Exact).unwrap();
                        assert_eq!(exact.rows[0].certified_separated, sep);
                    }
                }
            }
        }
    }
}

#[test]
fn free_boundary_counts_match_lcp_oracle() {
    check_free_boundary_oracle(1..=5);
}
