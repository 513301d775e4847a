//! Property checks shared by the proptest suite and the acceptance run. Each
//! panics with a description on violation.

#![allow(dead_code)]

use hypgrowth::boundary::{
    act_on_ray, boundary_entropy_estimate, enumerate_rays, ray_gromov_product, BoundaryMetricParams,
};
use hypgrowth::cache::{read_ball, write_ball};
use hypgrowth::cayley::{
    enumerate_ball, growth_rate_estimate, relative_growth_rate, relative_growth_tree, separated_subset_sphere,
    verify_condition_star, verify_separated, BallIndex, Budget, Strategy,
};
use hypgrowth::group::{invert, GroupModel, GroupSpec, Word};
use hypgrowth::hyperbolicity::{
    compute_certificate, estimate_delta, gromov_product, tripod_thinness, Certificate, DeltaScope, HypConstants,
};
use hypgrowth::num::{HalfInt, Rational};

pub fn spec(s: &str) -> GroupSpec {
    s.parse().unwrap()
}

pub fn ball(s: &str, r: usize) -> BallIndex {
    enumerate_ball(&spec(s), r, Budget::unlimited()).unwrap()
}

pub fn word(s: &str) -> Word {
    s.parse().unwrap()
}

/// Canonical forms, group axioms and identity detection on sample words.
pub fn group_props(spec: &GroupSpec, u: &Word, v: &Word, w: &Word) {
    let cu = spec.canonicalize(u).unwrap();
    assert_eq!(spec.canonicalize(&cu).unwrap(), cu, "canonicalize not idempotent on {u}");
    let uv_w = spec.multiply(&spec.multiply(u, v).unwrap(), w).unwrap();
    let u_vw = spec.multiply(u, &spec.multiply(v, w).unwrap()).unwrap();
    assert_eq!(uv_w, u_vw, "associativity fails on {u}, {v}, {w}");
    assert!(spec.multiply(u, &invert(u)).unwrap().is_empty());
    // Commutators and conjugated relators are trivial in the right models.
    let mut candidates = vec![u.concat(&invert(u)), v.concat(u).concat(&invert(u)).concat(&invert(v))];
    for r in spec.relators() {
        candidates.push(u.concat(r).concat(&invert(u)));
    }
    candidates.push(u.concat(v).concat(&invert(u)).concat(&invert(v)));
    for x in candidates.iter().chain([u, v, w]) {
        if spec.is_identity(x) {
            assert!(
                spec.abelianization_fingerprint(x).iter().all(|&e| e == 0),
                "identity {x} has nonzero fingerprint"
            );
        }
    }
    for r in spec.relators() {
        assert!(spec.is_identity(&u.concat(r).concat(&invert(u))));
    }
    match spec.model() {
        GroupModel::Free(_) => {
            let ls = cu.letters();
            assert!(ls.windows(2).all(|p| p[0] != p[1].inverse()), "{cu} not reduced");
        }
        GroupModel::Surface(_) => {
            assert!(cu.len() <= u.len(), "canonicalize lengthened {u}");
            assert_eq!(spec.is_identity(u), cu.is_empty());
        }
        GroupModel::FreeAbelian(_) => {}
    }
}

/// Sphere sums, parent chains and determinism of the ball.
pub fn ball_props(s: &str, r: usize) {
    let idx = ball(s, r);
    let counts = idx.sphere_counts();
    for n in 0..=r {
        assert_eq!(counts[..=n].iter().sum::<usize>(), idx.ball_count(n));
    }
    for id in 0..idx.len() as u32 {
        if let Some(p) = idx.parent(id) {
            assert_eq!(idx.length(p) + 1, idx.length(id));
        }
        let w = idx.geodesic_word(id).unwrap();
        assert_eq!(w.len(), idx.length(id));
        for t in 0..=w.len() {
            let p = idx.lookup(&w.prefix(t)).expect("prefix in ball");
            assert_eq!(idx.length(p), t);
        }
    }
    if let GroupModel::Free(k) = idx.spec().model() {
        for n in 1..=r {
            assert_eq!(counts[n], 2 * k * (2 * k - 1).pow(n as u32 - 1));
        }
    }
    assert!(ball(s, r).same_contents(&idx), "enumeration is not deterministic");
}

/// Greedy never beats exact, and both outputs are separated.
pub fn separated_props(idx: &BallIndex, n: usize, eps: u32) {
    let g = separated_subset_sphere(idx, n, eps, Strategy::Greedy).unwrap();
    assert!(verify_separated(idx, &g.ids, eps).unwrap());
    if let Ok(e) = separated_subset_sphere(idx, n, eps, Strategy::Exact) {
        assert!(verify_separated(idx, &e.ids, eps).unwrap());
        assert!(g.count() <= e.count(), "greedy {} > exact {}", g.count(), e.count());
    }
}

/// Condition (*) rechecked on small trees, relative ≤ absolute growth, and
/// deterministic trees.
pub fn star_props(idx: &BallIndex, m: u32, eps: u32, lambda: Rational) {
    let n_max = idx.radius() / m as usize;
    let Ok(tree) = relative_growth_tree(idx, m, eps, lambda, n_max, Strategy::Greedy) else {
        return;
    };
    if tree.levels.last().map_or(0, Vec::len) <= 500 {
        verify_condition_star(idx, &tree).unwrap();
    }
    let again = relative_growth_tree(idx, m, eps, lambda, n_max, Strategy::Greedy).unwrap();
    assert_eq!(tree, again);
    if let Ok(rel) = relative_growth_rate(&tree) {
        let gr = growth_rate_estimate(idx, 0..=idx.radius()).unwrap();
        assert!(rel.rate <= gr.rate + 0.05, "relative {} > growth {}", rel.rate, gr.rate);
    }
}

/// Symmetry and range of Gromov products at the identity over `B(r)`, and
/// at a few other base points.
pub fn gromov_props(idx: &BallIndex, r: usize) {
    let pts: Vec<u32> = idx.ball(r).collect();
    for &x in &pts {
        for &y in &pts {
            let p = gromov_product(idx, x, y, 0).unwrap();
            assert_eq!(p, gromov_product(idx, y, x, 0).unwrap());
            assert!(p >= HalfInt::ZERO);
            let bound = idx.length(x).min(idx.length(y)) as i64;
            assert!(p <= HalfInt::from_int(bound));
        }
    }
    for &base in pts.iter().step_by(7) {
        for &x in pts.iter().step_by(3) {
            for &y in pts.iter().step_by(5) {
                if let (Ok(p), Ok(q)) = (gromov_product(idx, x, y, base), gromov_product(idx, y, x, base)) {
                    assert_eq!(p, q);
                    assert!(p >= HalfInt::ZERO);
                }
            }
        }
    }
}

/// Exhaustive δ̂ never decreases with the scanned radius.
pub fn delta_monotone(idx: &BallIndex, r_max: usize) -> Vec<HalfInt> {
    let ds: Vec<HalfInt> = (0..=r_max)
        .map(|r| estimate_delta(idx, DeltaScope::Exhaustive { r }).unwrap().delta)
        .collect();
    assert!(ds.windows(2).all(|w| w[0] <= w[1]), "δ̂ not monotone: {ds:?}");
    ds
}

/// Largest tripod thinness over all triangles with vertices in `B(r)`.
pub fn max_thinness(idx: &BallIndex, r: usize) -> HalfInt {
    let pts: Vec<u32> = idx.ball(r).collect();
    let mut worst = HalfInt::ZERO;
    for (i, &a) in pts.iter().enumerate() {
        for (j, &b) in pts.iter().enumerate().skip(i + 1) {
            for &c in &pts[j + 1..] {
                worst = worst.max(tripod_thinness(idx, a, b, c).unwrap());
            }
        }
    }
    worst
}

/// A certificate is a pure function of its inputs and survives its record.
pub fn certificate_purity(delta2: i64, c0: Rational, d: Rational, lambda: Rational, eps: u32, m: u32, eta: f64) {
    let consts = HypConstants::new(HalfInt::from_doubled(delta2), c0, d).unwrap();
    let Ok(a) = compute_certificate(&consts, lambda, eps, m, eta) else {
        return;
    };
    let b = compute_certificate(&consts, lambda, eps, m, eta).unwrap();
    assert!(a.bit_identical(&b));
    assert!(a.bit_identical(&a.recompute().unwrap()));
    let parsed = Certificate::from_record(&a.to_record()).unwrap();
    assert!(a.bit_identical(&parsed), "record round trip changed the certificate");
    assert_eq!(parsed.to_record(), a.to_record());
}

/// Packing/covering chain and monotonicity over a sweep. With no ambiguous
/// pairs the inequalities are exact; otherwise the ambiguous count is the
/// allowed slack.
pub fn boundary_props(idx: &BallIndex, consts: &HypConstants, depth: usize, n_max: usize, eta: f64) {
    let params = BoundaryMetricParams::new(eta, consts.delta).unwrap();
    let mut thetas: Vec<f64> = (0..4).map(|j| (-eta * (j as f64 + 0.5)).exp()).collect();
    let halves: Vec<f64> = thetas.iter().map(|t| t / 2.0).collect();
    thetas.extend(halves);
    thetas.sort_by(f64::total_cmp);
    thetas.dedup();
    let est = boundary_entropy_estimate(idx, &params, consts, depth, 1, &thetas, 0..=n_max, Strategy::Greedy).unwrap();
    let rep = &est.report;
    for row in &rep.rows {
        assert!(row.spanning <= row.certified_separated + row.ambiguous, "{row:?}");
        if let Some(half) = rep.row(row.n, row.theta / 2.0) {
            assert!(row.certified_separated <= half.spanning + half.ambiguous, "{row:?} vs {half:?}");
        }
    }
    for n in 0..n_max {
        for &theta in &thetas {
            let (a, b) = (rep.row(n, theta).unwrap(), rep.row(n + 1, theta).unwrap());
            let slack = a.ambiguous + b.ambiguous;
            assert!(a.certified_separated <= b.certified_separated + slack, "separated not monotone in n");
            assert!(a.spanning <= b.spanning + slack, "spanning not monotone in n");
        }
    }
    for n in 0..=n_max {
        for w in thetas.windows(2) {
            let (lo, hi) = (rep.row(n, w[0]).unwrap(), rep.row(n, w[1]).unwrap());
            let slack = lo.ambiguous + hi.ambiguous;
            assert!(hi.certified_separated <= lo.certified_separated + slack, "separated not monotone in θ");
            assert!(hi.spanning <= lo.spanning + slack, "spanning not monotone in θ");
        }
    }
}

/// `g·(h·u) = (gh)·u`, and ray products are symmetric and bounded by depth.
pub fn ray_props(idx: &BallIndex, consts: &HypConstants, depth: usize, g: &Word, h: &Word) {
    let rays = enumerate_rays(idx, depth, 0).unwrap();
    let spec = idx.spec();
    let gh = spec.multiply(g, h).unwrap();
    for u in rays.iter().step_by(5) {
        let Ok(hu) = act_on_ray(h, u, idx) else { continue };
        let (Ok(left), Ok(right)) = (act_on_ray(g, &hu, idx), act_on_ray(&gh, u, idx)) else {
            continue;
        };
        assert_eq!(left.id, right.id);
        assert_eq!(left.depth, right.depth);
    }
    for u in rays.iter().step_by(7) {
        for v in rays.iter().step_by(11) {
            let a = ray_gromov_product(u, v, idx, consts).unwrap();
            let b = ray_gromov_product(v, u, idx, consts).unwrap();
            assert_eq!(a, b);
            assert!(a.value <= u.depth.min(v.depth));
        }
    }
}

/// Write, read, write again: the bytes must agree.
pub fn cache_round_trip(idx: &BallIndex) {
    let mut a = Vec::new();
    write_ball(idx, &mut a).unwrap();
    let back = read_ball(&a[..]).unwrap();
    assert!(back.same_contents(idx));
    let mut b = Vec::new();
    write_ball(&back, &mut b).unwrap();
    assert_eq!(a, b);
}

pub fn tree_consts() -> HypConstants {
    HypConstants::new(HalfInt::ZERO, Rational::from_integer(2), Rational::from_integer(0)).unwrap()
}
