use crate::cayley::BallIndex;
use crate::error::{Error, Result};
use crate::group::{Letter, Word};
use crate::hyperbolicity::HypConstants;
use crate::num::{HalfInt, Rational};

/// A boundary point seen at finite depth: a geodesic from the identity of
/// length `depth` that extends geodesically by at least `buffer` more steps
/// inside the enumerated ball.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayApprox {
    /// Element at the end of the ray.
    pub id: u32,
    pub depth: usize,
    pub buffer: usize,
    /// Element ids along the ray, identity first.
    pub prefixes: Vec<u32>,
}

impl RayApprox {
    fn from_element(index: &BallIndex, id: u32, buffer: usize) -> RayApprox {
        RayApprox {
            id,
            depth: index.length(id),
            buffer,
            prefixes: index.prefix_ids(id),
        }
    }

    pub fn word(&self, index: &BallIndex) -> Word {
        index.word(self.id)
    }

    /// Element at distance `t` along the ray.
    pub fn prefix(&self, t: usize) -> u32 {
        self.prefixes[t]
    }
}

/// `⌈4δ⌉ + 2`.
pub fn default_buffer(delta: HalfInt) -> usize {
    (HalfInt::from_doubled(delta.doubled() * 4).ceil() + 2) as usize
}

fn outward(index: &BallIndex, id: u32) -> impl Iterator<Item = u32> + '_ {
    let target = index.length(id) + 1;
    let a = index.generating_set().alphabet_size();
    (0..a).filter_map(move |c| {
        let l = Letter::from_code(c);
        index
            .neighbour(id, l)
            .filter(|&n| index.length(n) == target)
    })
}

/// Geodesics of length `depth` that extend geodesically to length
/// `depth + buffer`, in shortlex order.
pub fn enumerate_rays(index: &BallIndex, depth: usize, buffer: usize) -> Result<Vec<RayApprox>> {
    index.spec().require_hyperbolic()?;
    let top = depth + buffer;
    if top > index.radius() {
        return Err(Error::capability("enumerate_rays", top, index.radius()));
    }
    // extends[id]: id reaches S(top) through strictly outward steps
    let mut extends = vec![false; index.ball_count(top)];
    for id in index.sphere(top) {
        extends[id as usize] = true;
    }
    for level in (depth..top).rev() {
        for id in index.sphere(level) {
            extends[id as usize] = outward(index, id).any(|n| extends[n as usize]);
        }
    }
    Ok(index
        .sphere(depth)
        .filter(|&id| extends[id as usize])
        .map(|id| RayApprox::from_element(index, id, buffer))
        .collect())
}

/// Largest number of outward geodesic steps available from `id` inside the
/// ball.
fn extension_headroom(index: &BallIndex, id: u32) -> usize {
    let mut frontier = vec![id];
    let mut steps = 0;
    while index.length(frontier[0]) < index.radius() {
        let mut next: Vec<u32> = frontier.iter().flat_map(|&x| outward(index, x)).collect();
        next.sort_unstable();
        next.dedup();
        if next.is_empty() {
            break;
        }
        frontier = next;
        steps += 1;
    }
    steps
}

/// `L_g` at finite depth: the ray ending at `g·u_depth`, with its buffer
/// recomputed.
pub fn act_on_ray(g: &Word, u: &RayApprox, index: &BallIndex) -> Result<RayApprox> {
    index.spec().validate(g)?;
    if g.len() + u.depth > index.radius() {
        return Err(Error::capability("act_on_ray", g.len() + u.depth, index.radius()));
    }
    let x = index
        .lookup(&g.concat(&index.repr(u.id)))
        .ok_or_else(|| Error::capability("act_on_ray", g.len() + u.depth, index.radius()))?;
    Ok(RayApprox::from_element(index, x, extension_headroom(index, x)))
}

/// Gromov product of two rays at infinity, estimated by fellow traveling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayProduct {
    /// Largest `t` with `d(u_t, v_t) ≤ ⌊4δ⌋`.
    pub value: usize,
    /// `2δ`: the gap between the product of the boundary points and the
    /// lim inf of products along representing sequences.
    pub error_bar: Rational,
    /// Half the fellow-traveling threshold, reported separately.
    pub slack: Rational,
}

/// `⌊4δ⌋`.
pub fn fellow_threshold(consts: &HypConstants) -> usize {
    consts.delta.floor_mul(4) as usize
}

pub(crate) fn check_threshold(index: &BallIndex, consts: &HypConstants) -> Result<usize> {
    let k = fellow_threshold(consts);
    if k > index.radius() {
        return Err(Error::capability("fellow-traveling threshold", k, index.radius()));
    }
    Ok(k)
}

/// `max{t ≤ min depth : d(u_t, v_t) ≤ k}` over prefix chains.
pub(crate) fn fellow_travel(index: &BallIndex, u: &[u32], v: &[u32], k: usize) -> usize {
    let top = u.len().min(v.len()) - 1;
    if k == 0 {
        // prefix chains are paths in the parent tree: once apart, always apart
        return u.iter().zip(v).take_while(|(a, b)| a == b).count() - 1;
    }
    (0..=top).rev().find(|&t| index.within(u[t], v[t], k)).unwrap_or(0)
}

pub fn ray_gromov_product(
    u: &RayApprox,
    v: &RayApprox,
    index: &BallIndex,
    consts: &HypConstants,
) -> Result<RayProduct> {
    let k = check_threshold(index, consts)?;
    Ok(RayProduct {
        value: fellow_travel(index, &u.prefixes, &v.prefixes, k),
        error_bar: consts.delta.to_rational() * Rational::from_integer(2),
        slack: Rational::new(k as i64, 2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{enumerate_ball, Budget};
    use crate::group::GroupSpec;

    fn tree_consts() -> HypConstants {
        HypConstants::new(HalfInt::ZERO, Rational::from_integer(2), Rational::from_integer(0)).unwrap()
    }

    fn ray(index: &BallIndex, s: &str) -> RayApprox {
        let id = index.lookup(&s.parse().unwrap()).unwrap();
        RayApprox::from_element(index, id, 0)
    }

    #[test]
    fn free_rays() {
        let idx = enumerate_ball(&GroupSpec::free(2).unwrap(), 5, Budget::unlimited()).unwrap();
        assert_eq!(enumerate_rays(&idx, 2, 3).unwrap().len(), 12);
        let root = enumerate_rays(&idx, 0, 2).unwrap();
        assert_eq!(root.len(), 1);
        assert_eq!(root[0].word(&idx), Word::empty());
        assert!(matches!(enumerate_rays(&idx, 3, 3), Err(Error::Capability { .. })));
    }

    #[test]
    fn abelian_has_no_boundary() {
        let idx = enumerate_ball(&GroupSpec::free_abelian(2).unwrap(), 3, Budget::unlimited()).unwrap();
        assert!(matches!(enumerate_rays(&idx, 1, 1), Err(Error::Unsupported(_))));
    }

    #[test]
    fn tree_products_are_common_prefixes() {
        let idx = enumerate_ball(&GroupSpec::free(2).unwrap(), 5, Budget::unlimited()).unwrap();
        let c = tree_consts();
        let (u, v) = (ray(&idx, "abab"), ray(&idx, "abba"));
        let p = ray_gromov_product(&u, &v, &idx, &c).unwrap();
        assert_eq!(p.value, 2);
        assert_eq!(p.error_bar, Rational::from_integer(0));
        assert_eq!(ray_gromov_product(&u, &u, &idx, &c).unwrap().value, 4);
    }

    #[test]
    fn translation_in_a_tree() {
        let idx = enumerate_ball(&GroupSpec::free(2).unwrap(), 6, Budget::unlimited()).unwrap();
        let u = ray(&idx, "abab");
        let moved = act_on_ray(&"A".parse().unwrap(), &u, &idx).unwrap();
        assert_eq!(moved.word(&idx), "bab".parse().unwrap());
        assert_eq!(moved.depth, 3);
        let grown = act_on_ray(&"b".parse().unwrap(), &u, &idx).unwrap();
        assert_eq!(grown.word(&idx), "babab".parse().unwrap());
        assert_eq!(act_on_ray(&Word::empty(), &u, &idx).unwrap().id, u.id);
    }

    #[test]
    fn buffer_default() {
        assert_eq!(default_buffer(HalfInt::ZERO), 2);
        assert_eq!(default_buffer(HalfInt::from_doubled(1)), 4);
        assert_eq!(default_buffer(HalfInt::from_int(1)), 6);
    }
}
