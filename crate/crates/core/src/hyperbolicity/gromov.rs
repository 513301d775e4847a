use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cayley::BallIndex;
use crate::error::{Error, Result};
use crate::num::HalfInt;

/// Largest point set scanned exhaustively by [`estimate_delta`].
pub const EXHAUSTIVE_POINT_LIMIT: usize = 600;

fn dist(index: &BallIndex, a: u32, b: u32, what: &'static str) -> Result<i64> {
    index
        .dist(a, b)
        .map(|d| d as i64)
        .ok_or_else(|| Error::capability(what, index.radius() + 1, index.radius()))
}

/// `(x|y)_base = ½(d(base,x) + d(base,y) − d(x,y))`.
pub fn gromov_product(index: &BallIndex, x: u32, y: u32, base: u32) -> Result<HalfInt> {
    let bx = dist(index, base, x, "gromov_product")?;
    let by = dist(index, base, y, "gromov_product")?;
    let xy = dist(index, x, y, "gromov_product")?;
    Ok(HalfInt::from_doubled(bx + by - xy))
}

/// Which quadruples the four-point scan visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaScope {
    /// Every quadruple of points of `B(r)`; needs radius `2r`.
    Exhaustive { r: usize },
    /// `count` random quadruples from `B(⌊R/2⌋)`.
    Sampled { count: usize, seed: u64 },
}

/// A four-point lower bound for δ and the coverage it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaEstimate {
    pub delta: HalfInt,
    pub scope: DeltaScope,
    /// Radius of the ball the points were drawn from.
    pub point_radius: usize,
    pub points: usize,
    pub quadruples: u64,
    /// A quadruple attaining the maximum.
    pub witness: Option<[u32; 4]>,
}

impl DeltaEstimate {
    /// Sampled scans miss quadruples even inside their ball.
    pub fn is_exhaustive(&self) -> bool {
        matches!(self.scope, DeltaScope::Exhaustive { .. })
    }

    pub fn coverage(&self) -> String {
        match self.scope {
            DeltaScope::Exhaustive { r } => format!("exhaustive B({r}), {} points", self.points),
            DeltaScope::Sampled { count, seed } => {
                format!("sampled {count} quadruples from B({}), seed {seed}", self.point_radius)
            }
        }
    }
}

/// Twice the least δ for which one quadruple satisfies the four-point
/// condition at every base point: the gap between the largest and the middle
/// of the three pair sums.
fn quadruple_defect(d: impl Fn(usize, usize) -> i64, [x, y, z, w]: [usize; 4]) -> i64 {
    let mut s = [d(x, y) + d(z, w), d(x, z) + d(y, w), d(x, w) + d(y, z)];
    s.sort_unstable();
    s[2] - s[1]
}

/// Four-point estimate of δ: the largest violation of
/// `(x|z) ≥ min{(x|y), (y|z)} − δ` over the scanned quadruples, base points
/// included. Always a lower bound for the δ of the whole graph.
pub fn estimate_delta(index: &BallIndex, scope: DeltaScope) -> Result<DeltaEstimate> {
    let r = match scope {
        DeltaScope::Exhaustive { r } => {
            if 2 * r > index.radius() {
                return Err(Error::capability("estimate_delta", 2 * r, index.radius()));
            }
            r
        }
        DeltaScope::Sampled { .. } => index.radius() / 2,
    };
    let pts: Vec<u32> = index.ball(r).collect();
    let n = pts.len();
    if let DeltaScope::Exhaustive { .. } = scope {
        if n > EXHAUSTIVE_POINT_LIMIT {
            return Err(Error::input(format!(
                "exhaustive scan refused: B({r}) has {n} points (limit {EXHAUSTIVE_POINT_LIMIT})"
            )));
        }
    }
    let mut best = 0i64;
    let mut witness = None;
    let mut quadruples = 0u64;
    match scope {
        DeltaScope::Exhaustive { .. } => {
            let mut dm = vec![0i64; n * n];
            for i in 0..n {
                for j in i + 1..n {
                    let d = dist(index, pts[i], pts[j], "estimate_delta")?;
                    dm[i * n + j] = d;
                    dm[j * n + i] = d;
                }
            }
            let d = |a: usize, b: usize| dm[a * n + b];
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        for l in k + 1..n {
                            quadruples += 1;
                            let v = quadruple_defect(d, [i, j, k, l]);
                            if v > best {
                                best = v;
                                witness = Some([pts[i], pts[j], pts[k], pts[l]]);
                            }
                        }
                    }
                }
            }
        }
        DeltaScope::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                let q: [usize; 4] = std::array::from_fn(|_| rng.random_range(0..n));
                let mut cache = [[0i64; 4]; 4];
                for a in 0..4 {
                    for b in a + 1..4 {
                        let v = dist(index, pts[q[a]], pts[q[b]], "estimate_delta")?;
                        cache[a][b] = v;
                        cache[b][a] = v;
                    }
                }
                quadruples += 1;
                let v = quadruple_defect(|a, b| cache[a][b], [0, 1, 2, 3]);
                if v > best {
                    best = v;
                    witness = Some(q.map(|i| pts[i]));
                }
            }
        }
    }
    Ok(DeltaEstimate {
        delta: HalfInt::from_doubled(best),
        scope,
        point_radius: r,
        points: n,
        quadruples,
        witness,
    })
}

/// Empirical thinness of the geodesic triangle on `x1, x2, x3`.
///
/// Each side is the stored geodesic of `xᵢ⁻¹xⱼ` translated to start at `xᵢ`.
/// Side vertices are mapped to the comparison tripod whose legs are the
/// Gromov products at the three corners; the result is the largest excess of
/// a true distance over the tripod distance among all pairs of side vertices.
pub fn tripod_thinness(index: &BallIndex, x1: u32, x2: u32, x3: u32) -> Result<HalfInt> {
    let xs = [x1, x2, x3];
    let mut d = [[0i64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                d[i][j] = dist(index, xs[i], xs[j], "tripod_thinness")?;
            }
        }
    }
    // doubled leg lengths: leg i = (xj|xk)_{xi}
    let leg = |i: usize| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        d[i][j] + d[i][k] - d[j][k]
    };
    let legs = [leg(0), leg(1), leg(2)];
    // (vertex id, leg, doubled distance from the centre)
    let mut points: Vec<(u32, usize, i64)> = Vec::new();
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        let inv = index.repr(xs[i]).inverse();
        let q = index
            .lookup(&inv.concat(&index.repr(xs[j])))
            .ok_or_else(|| Error::capability("tripod_thinness", index.radius() + 1, index.radius()))?;
        let side = index.prefix_ids(q);
        for (t, &s) in side.iter().enumerate() {
            let v = index
                .mul_ids(xs[i], s)
                .ok_or_else(|| Error::capability("tripod_thinness", index.radius() + 1, index.radius()))?;
            let t2 = 2 * t as i64;
            let pos = if t2 <= legs[i] {
                (i, legs[i] - t2)
            } else {
                (j, t2 - legs[i])
            };
            points.push((v, pos.0, pos.1));
        }
    }
    let mut worst = 0i64;
    for (a, &(va, la, sa)) in points.iter().enumerate() {
        for &(vb, lb, sb) in &points[a + 1..] {
            let tripod = if la == lb { (sa - sb).abs() } else { sa + sb };
            let real = 2 * dist(index, va, vb, "tripod_thinness")?;
            worst = worst.max(real - tripod);
        }
    }
    Ok(HalfInt::from_doubled(worst))
}
