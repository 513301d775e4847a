//! Maximum independent sets in small conflict graphs, by branch and bound
//! over cliques of the complement with greedy colouring bounds.

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Bits {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }
}

/// A largest set of vertices `0..n` no two of which conflict. Ties are broken
/// deterministically; the result is sorted.
pub(crate) fn maximum_independent_set(n: usize, conflict: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    // compatibility graph: edges between non-conflicting distinct vertices
    let mut adj = vec![Bits::new(n); n];
    for i in 0..n {
        for j in i + 1..n {
            if !conflict(i, j) {
                adj[i].set(j);
                adj[j].set(i);
            }
        }
    }
    let mut all = Bits::new(n);
    for i in 0..n {
        all.set(i);
    }
    let mut best = Vec::new();
    let mut clique = Vec::new();
    expand(&adj, &mut clique, all, &mut best);
    best.sort_unstable();
    best
}

fn colour_order(adj: &[Bits], p: &Bits) -> Vec<(usize, usize)> {
    let mut order = Vec::new();
    let mut uncoloured = p.clone();
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut q = uncoloured.clone();
        while let Some(v) = q.first() {
            uncoloured.clear(v);
            q.clear(v);
            q.and_not_assign(&adj[v]);
            order.push((v, colour));
        }
    }
    order
}

fn expand(adj: &[Bits], clique: &mut Vec<usize>, mut p: Bits, best: &mut Vec<usize>) {
    let order = colour_order(adj, &p);
    for &(v, colour) in order.iter().rev() {
        if clique.len() + colour <= best.len() {
            return;
        }
        clique.push(v);
        let next = p.and(&adj[v]);
        if next.is_empty() {
            if clique.len() > best.len() {
                *best = clique.clone();
            }
        } else {
            expand(adj, clique, next, best);
        }
        clique.pop();
        p.clear(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(n: usize, conflict: &dyn Fn(usize, usize) -> bool) -> usize {
        (0u32..1 << n)
            .filter(|mask| {
                (0..n).all(|i| (0..n).all(|j| i == j || mask >> i & 1 == 0 || mask >> j & 1 == 0 || !conflict(i, j)))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn cycle_and_path() {
        let c7 = |i: usize, j: usize| (i + 1) % 7 == j || (j + 1) % 7 == i;
        assert_eq!(maximum_independent_set(7, c7).len(), 3);
        let path = |i: usize, j: usize| i.abs_diff(j) == 1;
        assert_eq!(maximum_independent_set(6, path), vec![1, 3, 5]);
        assert!(maximum_independent_set(0, path).is_empty());
    }

    #[test]
    fn matches_brute_force_on_pseudo_random_graphs() {
        for seed in 0u64..30 {
            let n = 5 + (seed % 9) as usize;
            let conflict = move |i: usize, j: usize| {
                let (a, b) = (i.min(j) as u64, i.max(j) as u64);
                (a.wrapping_mul(31).wrapping_add(b * 17).wrapping_add(seed * 7919)) % 3 == 0
            };
            let set = maximum_independent_set(n, conflict);
            for (x, &i) in set.iter().enumerate() {
                for &j in &set[x + 1..] {
                    assert!(!conflict(i, j));
                }
            }
            assert_eq!(set.len(), brute(n, &conflict), "seed {seed}");
        }
    }
}
