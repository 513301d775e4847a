//! Brute-force oracles shared by the integration tests. They work on plain
//! letter vectors and never touch `BallIndex`, so agreement with the library
//! is evidence rather than tautology.

#![allow(dead_code)]

pub mod props;

use std::collections::HashMap;

/// Letter as a signed generator number: `+(i+1)` for generator `i`, `-(i+1)`
/// for its inverse.
pub type L = i8;

pub fn letter_char(l: L) -> char {
    let base = (l.unsigned_abs() - 1) as u8;
    if l > 0 {
        (b'a' + base) as char
    } else {
        (b'A' + base) as char
    }
}

pub fn to_text(w: &[L]) -> String {
    w.iter().map(|&l| letter_char(l)).collect()
}

pub fn free_reduce(w: &[L]) -> Vec<L> {
    let mut out: Vec<L> = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn inverse(w: &[L]) -> Vec<L> {
    w.iter().rev().map(|&l| -l).collect()
}

/// Every freely reduced word of length exactly `n` over `k` generators.
pub fn reduced_words(k: usize, n: usize) -> Vec<Vec<L>> {
    let letters: Vec<L> = (1..=k as L).flat_map(|g| [g, -g]).collect();
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &out {
            for &l in &letters {
                if w.last() != Some(&-l) {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        out = next;
    }
    out
}

/// Dehn's algorithm for the genus-`g` surface relator `[a1,b1]…[ag,bg]`:
/// repeatedly replace a subword that is more than half of a cyclic rotation
/// of the relator or its inverse by the inverse of the remaining part.
pub struct Dehn {
    rotations: Vec<Vec<L>>,
}

impl Dehn {
    pub fn surface(g: usize) -> Dehn {
        let mut r = Vec::new();
        for i in 0..g as L {
            let (a, b) = (2 * i + 1, 2 * i + 2);
            r.extend([a, b, -a, -b]);
        }
        let mut rotations = Vec::new();
        for base in [r.clone(), inverse(&r)] {
            for s in 0..base.len() {
                rotations.push(base[s..].iter().chain(&base[..s]).copied().collect());
            }
        }
        Dehn { rotations }
    }

    pub fn reduce(&self, w: &[L]) -> Vec<L> {
        let mut w = free_reduce(w);
        'outer: loop {
            for rot in &self.rotations {
                let n = rot.len();
                let half = n / 2 + 1;
                for i in 0..w.len() {
                    let mut len = 0;
                    while i + len < w.len() && len < n && w[i + len] == rot[len] {
                        len += 1;
                    }
                    if len >= half {
                        let tail = inverse(&rot[len..]);
                        let mut v = w[..i].to_vec();
                        v.extend(tail);
                        v.extend_from_slice(&w[i + len..]);
                        w = free_reduce(&v);
                        continue 'outer;
                    }
                }
            }
            return w;
        }
    }

    pub fn equal(&self, u: &[L], v: &[L]) -> bool {
        let mut w = u.to_vec();
        w.extend(inverse(v));
        self.reduce(&w).is_empty()
    }
}

fn exponent_sums(w: &[L], k: usize) -> Vec<i32> {
    let mut v = vec![0; k];
    for &l in w {
        v[(l.unsigned_abs() - 1) as usize] += l.signum() as i32;
    }
    v
}

/// Sphere counts of the genus-`g` surface group up to `max_len`, by pairwise
/// Dehn equality over all freely reduced words, shortest first.
pub fn surface_sphere_counts(g: usize, max_len: usize) -> Vec<usize> {
    let dehn = Dehn::surface(g);
    let k = 2 * g;
    // Representatives bucketed by abelianization, a necessary condition for
    // equality that keeps the pairwise scan small.
    let mut reps: HashMap<Vec<i32>, Vec<Vec<L>>> = HashMap::new();
    let mut counts = Vec::new();
    for n in 0..=max_len {
        let mut new = 0;
        for w in reduced_words(k, n) {
            let key = exponent_sums(&w, k);
            let bucket = reps.entry(key).or_default();
            if !bucket.iter().any(|r| dehn.equal(r, &w)) {
                bucket.push(w);
                new += 1;
            }
        }
        counts.push(new);
    }
    counts
}

fn lcp(u: &[L], v: &[L]) -> usize {
    u.iter().zip(v).take_while(|(a, b)| a == b).count()
}

/// Matrix of `min_{g ∈ B(n)} |lcp(red(g·u), red(g·v))|` over all pairs of
/// `words` in the free group on `k` generators.
pub fn free_min_products(k: usize, n: usize, words: &[Vec<L>]) -> Vec<Vec<usize>> {
    let gs: Vec<Vec<L>> = (0..=n).flat_map(|len| reduced_words(k, len)).collect();
    let r = words.len();
    let mut m = vec![vec![usize::MAX; r]; r];
    for i in 0..r {
        for j in i + 1..r {
            let mut best = usize::MAX;
            for g in &gs {
                let mut gu = g.clone();
                gu.extend_from_slice(&words[i]);
                let mut gv = g.clone();
                gv.extend_from_slice(&words[j]);
                best = best.min(lcp(&free_reduce(&gu), &free_reduce(&gv)));
            }
            m[i][j] = best;
            m[j][i] = best;
        }
    }
    m
}

/// Separated and spanning counts under `d = exp(−η·min product)`, exact on a
/// tree, from a [`free_min_products`] matrix.
///
/// Closeness `d < θ` is checked to be an equivalence relation; the maximum
/// separated set and the minimum spanning set are then both the number of
/// classes.
pub fn free_boundary_counts(m: &[Vec<usize>], eta: f64, theta: f64) -> (usize, usize) {
    let r = m.len();
    let close = |i: usize, j: usize| i == j || (-eta * m[i][j] as f64).exp() < theta;
    let mut class = vec![usize::MAX; r];
    let mut classes = 0;
    for i in 0..r {
        if class[i] != usize::MAX {
            continue;
        }
        for j in i..r {
            if close(i, j) {
                assert_eq!(class[j], usize::MAX, "closeness is not transitive");
                class[j] = classes;
            }
        }
        classes += 1;
    }
    for i in 0..r {
        for j in 0..r {
            assert_eq!(close(i, j), class[i] == class[j], "closeness is not an equivalence");
        }
    }
    (classes, classes)
}
