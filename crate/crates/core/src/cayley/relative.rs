use crate::cayley::separated::greedy_separated;
use crate::cayley::{BallIndex, Strategy};
use crate::error::{Error, Result};
use crate::hyperbolicity::{mu, tau, HypConstants};
use crate::mis::maximum_independent_set;
use crate::num::{lsq_slope, Rational};

/// Largest candidate list handed to the exact per-parent search.
const EXACT_CHILD_LIMIT: usize = 200;
/// Largest leaf set whose pairs the condition checker visits.
pub const CHECKER_LEAF_LIMIT: usize = 500;
/// Number of deepest levels the relative rate is fitted over.
const RATE_WINDOW: usize = 4;

/// A node of a [`StarTree`]: an element and the index of its parent in the
/// previous level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StarNode {
    pub id: u32,
    pub parent: Option<u32>,
}

/// Chains `e = x₀, x₁, …` with `xₖ ∈ S(km)`, consecutive points at most
/// `T = m + ⌊λε⌋` apart, and children of a common parent pairwise at least `ε`
/// apart. Any two chains then satisfy the branching condition at the level
/// where they first differ.
#[derive(Clone, Debug, PartialEq)]
pub struct StarTree {
    pub m: u32,
    pub eps: u32,
    pub lambda: Rational,
    pub t: u32,
    pub strategy: Strategy,
    pub levels: Vec<Vec<StarNode>>,
}

impl StarTree {
    pub fn level_counts(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// The chain `x₀, …, x_k` ending at node `i` of level `k`.
    pub fn chain(&self, k: usize, i: usize) -> Vec<u32> {
        let mut out = Vec::with_capacity(k + 1);
        let mut level = k;
        let mut node = self.levels[k][i];
        loop {
            out.push(node.id);
            match node.parent {
                Some(p) => {
                    level -= 1;
                    node = self.levels[level][p as usize];
                }
                None => break,
            }
        }
        out.reverse();
        out
    }
}

/// `T = m + ⌊λε⌋`.
pub(crate) fn step_bound(m: u32, eps: u32, lambda: &Rational) -> Result<u32> {
    if *lambda <= Rational::from_integer(0) || *lambda >= Rational::from_integer(1) {
        return Err(Error::input(format!("λ = {lambda} must lie in (0, 1)")));
    }
    let le = (lambda * Rational::from_integer(eps as i64)).floor().to_integer();
    Ok(m + le as u32)
}

/// Builds the chain tree level by level down to `n_max`.
///
/// Each element is used at most once per level; the children of a node are
/// the unused elements of `S((k+1)m)` within distance `T`, thinned to an
/// ε-separated family.
pub fn relative_growth_tree(
    index: &BallIndex,
    m: u32,
    eps: u32,
    lambda: Rational,
    n_max: usize,
    strategy: Strategy,
) -> Result<StarTree> {
    if m == 0 || eps == 0 {
        return Err(Error::input("m and ε must be positive"));
    }
    let t = step_bound(m, eps, &lambda)?;
    let r = index.radius();
    if m as usize * n_max > r {
        return Err(Error::capability("relative_growth_tree", m as usize * n_max, r));
    }
    if n_max > 0 && (t as usize > r || eps as usize > r) {
        return Err(Error::capability("relative_growth_tree", (t.max(eps)) as usize, r));
    }
    let steps: Vec<u32> = index.ball(t as usize).filter(|&h| index.length(h) >= m as usize).collect();
    let mut levels = vec![vec![StarNode { id: 0, parent: None }]];
    let mut used = vec![false; index.len()];
    for k in 0..n_max {
        let target = (k + 1) * m as usize;
        let mut next = Vec::new();
        for (pi, node) in levels[k].iter().enumerate() {
            let mut cands: Vec<u32> = steps
                .iter()
                .filter_map(|&h| index.mul_ids(node.id, h))
                .filter(|&c| index.length(c) == target && !used[c as usize])
                .collect();
            cands.sort_unstable();
            cands.dedup();
            let close = |a: u32, b: u32| index.within(a, b, eps as usize - 1);
            let kept = match strategy {
                Strategy::Exact => {
                    if cands.len() > EXACT_CHILD_LIMIT {
                        return Err(Error::input(format!(
                            "exact search refused: {} candidate children (limit {EXACT_CHILD_LIMIT})",
                            cands.len()
                        )));
                    }
                    maximum_independent_set(cands.len(), |i, j| close(cands[i], cands[j]))
                        .into_iter()
                        .map(|i| cands[i])
                        .collect()
                }
                Strategy::Greedy => greedy_separated(&cands, close),
            };
            for c in kept {
                used[c as usize] = true;
                next.push(StarNode {
                    id: c,
                    parent: Some(pi as u32),
                });
            }
        }
        for n in &next {
            used[n.id as usize] = false;
        }
        levels.push(next);
    }
    Ok(StarTree {
        m,
        eps,
        lambda,
        t,
        strategy,
        levels,
    })
}

/// Re-verifies the chain conditions on the deepest level of a small tree,
/// straight from distance queries: every step within `T`, levels on the
/// right spheres, and for every pair of leaves the first differing points at
/// least `ε` apart.
pub fn verify_condition_star(index: &BallIndex, tree: &StarTree) -> Result<()> {
    let depth = tree.levels.len() - 1;
    let leaves = tree.levels[depth].len();
    if leaves > CHECKER_LEAF_LIMIT {
        return Err(Error::input(format!(
            "checker refused: {leaves} leaves (limit {CHECKER_LEAF_LIMIT})"
        )));
    }
    let chains: Vec<Vec<u32>> = (0..leaves).map(|i| tree.chain(depth, i)).collect();
    for chain in &chains {
        for (k, pair) in chain.windows(2).enumerate() {
            if index.length(pair[1]) != (k + 1) * tree.m as usize {
                return Err(Error::degenerate(format!("chain point off sphere S({})", (k + 1) * tree.m as usize)));
            }
            if !index.within(pair[0], pair[1], tree.t as usize) {
                return Err(Error::degenerate("chain step longer than T".to_string()));
            }
        }
    }
    for (i, x) in chains.iter().enumerate() {
        for y in &chains[i + 1..] {
            let Some(k) = x.iter().zip(y).position(|(a, b)| a != b) else {
                return Err(Error::degenerate("two leaves share a chain".to_string()));
            };
            if index.within(x[k], y[k], tree.eps as usize - 1) {
                return Err(Error::degenerate(format!(
                    "branch points {} and {} are closer than ε = {}",
                    index.word(x[k]),
                    index.word(y[k]),
                    tree.eps
                )));
            }
        }
    }
    Ok(())
}

/// Exponential rate of a chain tree's level counts.
#[derive(Clone, Debug, PartialEq)]
pub struct RelativeRate {
    pub rate: f64,
    /// Levels the slope was fitted over.
    pub levels: Vec<usize>,
    /// True when the tree came from the greedy construction, so the counts
    /// and the rate are lower bounds.
    pub lower_bound: bool,
}

/// Slope of `log(level count)` against `m·k` over the deepest nonempty levels
/// (level 0 excluded).
pub fn relative_growth_rate(tree: &StarTree) -> Result<RelativeRate> {
    let nonempty: Vec<usize> = (1..tree.levels.len()).filter(|&k| !tree.levels[k].is_empty()).collect();
    if nonempty.len() < 2 {
        return Err(Error::degenerate(format!(
            "relative rate needs at least 3 nonempty levels, tree has {}",
            nonempty.len() + 1
        )));
    }
    let levels: Vec<usize> = nonempty[nonempty.len().saturating_sub(RATE_WINDOW)..].to_vec();
    let xs: Vec<f64> = levels.iter().map(|&k| (k * tree.m as usize) as f64).collect();
    let ys: Vec<f64> = levels.iter().map(|&k| (tree.levels[k].len() as f64).ln()).collect();
    let rate = lsq_slope(&xs, &ys).ok_or_else(|| Error::degenerate("degenerate level window"))?;
    Ok(RelativeRate {
        rate,
        levels,
        lower_bound: tree.strategy == Strategy::Greedy,
    })
}

/// A finite grid of `(λ, ε, m)` triples.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamGrid {
    pub lambdas: Vec<Rational>,
    pub epsilons: Vec<u32>,
    pub ms: Vec<u32>,
}

impl ParamGrid {
    pub fn triples(&self) -> impl Iterator<Item = (Rational, u32, u32)> + '_ {
        self.lambdas.iter().flat_map(move |&l| {
            self.epsilons
                .iter()
                .flat_map(move |&e| self.ms.iter().map(move |&m| (l, e, m)))
        })
    }

    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty() || self.epsilons.is_empty() || self.ms.is_empty()
    }
}

/// One grid triple's admissibility, feasibility and rate.
#[derive(Clone, Debug, PartialEq)]
pub struct GridEntry {
    pub lambda: Rational,
    pub eps: u32,
    pub m: u32,
    pub t: u32,
    pub tau: Rational,
    pub mu: Rational,
    /// `ε > τ(λ)` and `m > μ(λ, ε)`, or forced by the caller.
    pub admissible: bool,
    /// The tree has at least three levels inside the enumerated radius.
    pub feasible: bool,
    pub level_counts: Vec<usize>,
    pub rate: Option<f64>,
}

/// Result of maximizing the relative rate over a grid.
#[derive(Clone, Debug, PartialEq)]
pub struct SupResult {
    pub entries: Vec<GridEntry>,
    /// Index into `entries` of the reported triple.
    pub best: Option<usize>,
    pub rate: Option<f64>,
    /// Set when no triple was both admissible and feasible, so the reported
    /// rate is the best over the unrestricted grid.
    pub heuristic: bool,
    pub strategy: Strategy,
}

/// Maximizes [`relative_growth_rate`] over the grid triples that fit in the
/// enumerated radius, preferring admissible ones.
pub fn relative_growth_sup(
    index: &BallIndex,
    consts: &HypConstants,
    grid: &ParamGrid,
    strategy: Strategy,
    force_admissible: bool,
) -> Result<SupResult> {
    if grid.is_empty() {
        return Err(Error::input("empty parameter grid"));
    }
    let r = index.radius();
    let mut entries = Vec::new();
    for (lambda, eps, m) in grid.triples() {
        if m == 0 || eps == 0 {
            return Err(Error::input("m and ε must be positive"));
        }
        let t = step_bound(m, eps, &lambda)?;
        let tau_v = tau(consts, &lambda)?;
        let mu_v = mu(consts, &lambda, eps)?;
        let admissible = force_admissible
            || (Rational::from_integer(eps as i64) > tau_v && Rational::from_integer(m as i64) > mu_v);
        let feasible = 3 * m as usize <= r && t as usize <= r && eps as usize <= r;
        let mut entry = GridEntry {
            lambda,
            eps,
            m,
            t,
            tau: tau_v,
            mu: mu_v,
            admissible,
            feasible,
            level_counts: Vec::new(),
            rate: None,
        };
        if feasible {
            let n_max = r / m as usize;
            let tree = relative_growth_tree(index, m, eps, lambda, n_max, strategy)?;
            entry.level_counts = tree.level_counts();
            entry.rate = relative_growth_rate(&tree).ok().map(|r| r.rate);
        }
        entries.push(entry);
    }
    let pick = |want_admissible: bool| {
        entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.rate.is_some() && (!want_admissible || e.admissible))
            .fold(None::<(usize, f64)>, |acc, (i, e)| {
                let r = e.rate.unwrap();
                match acc {
                    Some((_, best)) if best >= r => acc,
                    _ => Some((i, r)),
                }
            })
    };
    let (best, heuristic) = match pick(true) {
        Some(b) => (Some(b), false),
        None => (pick(false), true),
    };
    Ok(SupResult {
        best: best.map(|b| b.0),
        rate: best.map(|b| b.1),
        heuristic,
        entries,
        strategy,
    })
}
