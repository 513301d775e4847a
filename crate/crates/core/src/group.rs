//! Words over a symmetric alphabet, the supported group models, and a
//! word-problem oracle for each of them.
//!
//! Generator `i` is written as the `i`-th lowercase letter and its inverse as
//! the matching uppercase letter, so `"abA"` is `a·b·a⁻¹`. The identity is the
//! empty word; it is written `""` or `"1"`.
//!
//! For `Surface(g)` the generators are laid out as `a₁ b₁ a₂ b₂ …`, so the
//! defining relator of `Surface(2)` reads `abABcdCD`.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest generator count expressible in the one-letter text encoding.
pub const MAX_GENERATORS: usize = 26;

/// Cap on the number of words visited while shortlex-minimizing a surface
/// group word under length-preserving relator rewrites.
const HALF_SWAP_SEARCH_CAP: usize = 4096;

/// One symbol of the symmetric alphabet: a generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u8);

impl Letter {
    pub fn new(generator: usize, inverted: bool) -> Letter {
        assert!(generator < MAX_GENERATORS, "generator index {generator} out of range");
        Letter((2 * generator + inverted as usize) as u8)
    }

    /// Letters are numbered `a=0, A=1, b=2, B=3, …`; this is also the shortlex
    /// letter order.
    pub fn from_code(code: usize) -> Letter {
        assert!(code < 2 * MAX_GENERATORS);
        Letter(code as u8)
    }

    pub fn code(self) -> usize {
        self.0 as usize
    }

    pub fn generator(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_inverted(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn inverse(self) -> Letter {
        Letter(self.0 ^ 1)
    }

    pub fn to_char(self) -> char {
        let c = (b'a' + self.generator() as u8) as char;
        if self.is_inverted() {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        if c.is_ascii_lowercase() {
            Some(Letter::new((c as u8 - b'a') as usize, false))
        } else if c.is_ascii_uppercase() {
            Some(Letter::new((c as u8 - b'A') as usize, true))
        } else {
            None
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A finite sequence of letters. The empty word is the identity.
///
/// `Ord` is shortlex: shorter words first, then lexicographic in letter code.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    /// Plain concatenation, no reduction.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    /// Reversed sequence with every letter inverted.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Largest generator index used plus one (0 for the empty word).
    pub fn generator_bound(&self) -> usize {
        self.0.iter().map(|l| l.generator() + 1).max().unwrap_or(0)
    }
}

/// `invert(u)`: the word spelling `u⁻¹`.
pub fn invert(u: &Word) -> Word {
    u.inverse()
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        shortlex_cmp(&self.0, &other.0)
    }
}

pub(crate) fn shortlex_cmp(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "Word(1)")
        } else {
            write!(f, "Word({self})")
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|c| Letter::from_char(c).ok_or_else(|| Error::input(format!("bad letter {c:?} in word {s:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// The supported group models.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupModel {
    /// Free group on `k` generators.
    Free(usize),
    /// Fundamental group of the closed orientable surface of genus `g ≥ 2`.
    Surface(usize),
    /// ℤᵏ, the non-hyperbolic control.
    FreeAbelian(usize),
}

/// A group model together with its presentation data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    model: GroupModel,
    relators: Vec<Word>,
    // Surface only: all cyclic rotations of the relator and its inverse, and
    // for each letter code the rotations that start with it.
    rotations: Vec<Vec<Letter>>,
    starts: Vec<Vec<usize>>,
}

impl GroupSpec {
    pub fn new(model: GroupModel) -> Result<GroupSpec> {
        let gens = match model {
            GroupModel::Free(k) | GroupModel::FreeAbelian(k) => {
                if k == 0 {
                    return Err(Error::input("rank must be at least 1"));
                }
                k
            }
            GroupModel::Surface(g) => {
                if g < 2 {
                    return Err(Error::input(format!(
                        "surface:{g} is not hyperbolic; genus must be at least 2"
                    )));
                }
                2 * g
            }
        };
        if gens > MAX_GENERATORS {
            return Err(Error::input(format!(
                "{gens} generators exceed the {MAX_GENERATORS}-letter alphabet"
            )));
        }

        let relators = match model {
            GroupModel::Free(_) => Vec::new(),
            GroupModel::Surface(g) => {
                let mut r = Vec::with_capacity(4 * g);
                for i in 0..g {
                    let a = Letter::new(2 * i, false);
                    let b = Letter::new(2 * i + 1, false);
                    r.extend([a, b, a.inverse(), b.inverse()]);
                }
                vec![Word(r)]
            }
            GroupModel::FreeAbelian(k) => {
                let mut rs = Vec::new();
                for i in 0..k {
                    for j in i + 1..k {
                        let a = Letter::new(i, false);
                        let b = Letter::new(j, false);
                        rs.push(Word(vec![a, b, a.inverse(), b.inverse()]));
                    }
                }
                rs
            }
        };

        let mut rotations = Vec::new();
        let mut starts = vec![Vec::new(); 2 * gens];
        if let GroupModel::Surface(_) = model {
            let r = &relators[0];
            for base in [r.clone(), r.inverse()] {
                let n = base.len();
                for shift in 0..n {
                    let rot: Vec<Letter> = (0..n).map(|i| base.0[(shift + i) % n]).collect();
                    starts[rot[0].code()].push(rotations.len());
                    rotations.push(rot);
                }
            }
        }

        Ok(GroupSpec {
            model,
            relators,
            rotations,
            starts,
        })
    }

    pub fn free(k: usize) -> Result<GroupSpec> {
        GroupSpec::new(GroupModel::Free(k))
    }

    pub fn surface(g: usize) -> Result<GroupSpec> {
        GroupSpec::new(GroupModel::Surface(g))
    }

    pub fn free_abelian(k: usize) -> Result<GroupSpec> {
        GroupSpec::new(GroupModel::FreeAbelian(k))
    }

    pub fn model(&self) -> GroupModel {
        self.model
    }

    pub fn num_generators(&self) -> usize {
        match self.model {
            GroupModel::Free(k) | GroupModel::FreeAbelian(k) => k,
            GroupModel::Surface(g) => 2 * g,
        }
    }

    /// Size of the symmetric alphabet: `2k` for `Free(k)`/`FreeAbelian(k)`, `4g` for `Surface(g)`.
    pub fn alphabet_size(&self) -> usize {
        2 * self.num_generators()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Free and surface groups; the abelian control is not hyperbolic.
    pub fn is_hyperbolic(&self) -> bool {
        !matches!(self.model, GroupModel::FreeAbelian(_))
    }

    /// Rejects models whose Gromov boundary is undefined.
    pub fn require_hyperbolic(&self) -> Result<()> {
        if self.is_hyperbolic() {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "boundary undefined for non-hyperbolic control {self}"
            )))
        }
    }

    pub fn validate(&self, w: &Word) -> Result<()> {
        let k = self.num_generators();
        match w.0.iter().find(|l| l.generator() >= k) {
            Some(l) => Err(Error::input(format!(
                "letter {:?} is outside the alphabet of {self}",
                l
            ))),
            None => Ok(()),
        }
    }

    /// Canonical representative: reduced word for `Free`, sorted normal form
    /// for `FreeAbelian`, and for `Surface` a Dehn-reduced word that is
    /// shortlex-minimal among the words reachable by length-preserving
    /// relator rewrites. Idempotent.
    pub fn canonicalize(&self, w: &Word) -> Result<Word> {
        self.validate(w)?;
        Ok(match self.model {
            GroupModel::Free(_) => Word(free_reduce(&w.0)),
            GroupModel::FreeAbelian(_) => self.abelian_normal_form(w),
            GroupModel::Surface(_) => Word(self.surface_canonical(&w.0)),
        })
    }

    /// `canonicalize(u·v)`.
    pub fn multiply(&self, u: &Word, v: &Word) -> Result<Word> {
        self.canonicalize(&u.concat(v))
    }

    /// Decides whether `w` represents the identity. For surface groups this is
    /// Dehn's algorithm.
    pub fn is_identity(&self, w: &Word) -> bool {
        match self.model {
            GroupModel::Free(_) => free_reduce(&w.0).is_empty(),
            GroupModel::FreeAbelian(_) => self.exponent_sums(&w.0).iter().all(|&e| e == 0),
            GroupModel::Surface(_) => self.dehn_reduce(&w.0).is_empty(),
        }
    }

    /// Exponent sum of every generator.
    pub fn abelianization_fingerprint(&self, w: &Word) -> Vec<i64> {
        self.exponent_sums(&w.0)
    }

    /// A cheap length-nonincreasing normal form used on hot lookup paths:
    /// free reduction, the abelian normal form, or Dehn reduction without
    /// the shortlex search.
    pub fn shorten(&self, letters: &[Letter]) -> Vec<Letter> {
        match self.model {
            GroupModel::Free(_) => free_reduce(letters),
            GroupModel::FreeAbelian(_) => self.abelian_normal_form(&Word(letters.to_vec())).0,
            GroupModel::Surface(_) => self.dehn_reduce(letters),
        }
    }

    /// Bucket key for equality resolution: equal elements always have equal
    /// keys. It is a complete invariant for `Free` and `FreeAbelian`. For
    /// `Surface(g)` it is the image in the free product of `g` copies of ℤ²
    /// (obtained by killing each commutator `[aᵢ,bᵢ]`), which refines the
    /// abelianization.
    pub fn element_key(&self, letters: &[Letter]) -> Vec<i32> {
        match self.model {
            GroupModel::Free(_) => free_reduce(letters).iter().map(|l| l.code() as i32).collect(),
            GroupModel::FreeAbelian(_) => self.exponent_sums(letters).iter().map(|&e| e as i32).collect(),
            GroupModel::Surface(_) => {
                // stack of syllables (factor, x, y)
                let mut syl: Vec<(i32, i32, i32)> = Vec::new();
                for l in letters {
                    let factor = (l.generator() / 2) as i32;
                    let sign = if l.is_inverted() { -1 } else { 1 };
                    let (dx, dy) = if l.generator() % 2 == 0 { (sign, 0) } else { (0, sign) };
                    match syl.last_mut() {
                        Some(top) if top.0 == factor => {
                            top.1 += dx;
                            top.2 += dy;
                            if top.1 == 0 && top.2 == 0 {
                                syl.pop();
                            }
                        }
                        _ => syl.push((factor, dx, dy)),
                    }
                }
                syl.into_iter().flat_map(|(f, x, y)| [f, x, y]).collect()
            }
        }
    }

    fn exponent_sums(&self, letters: &[Letter]) -> Vec<i64> {
        let mut v = vec![0i64; self.num_generators()];
        for l in letters {
            if let Some(e) = v.get_mut(l.generator()) {
                *e += if l.is_inverted() { -1 } else { 1 };
            }
        }
        v
    }

    fn abelian_normal_form(&self, w: &Word) -> Word {
        let sums = self.exponent_sums(&w.0);
        let mut out = Vec::new();
        for (g, &e) in sums.iter().enumerate() {
            let l = Letter::new(g, e < 0);
            out.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
        }
        Word(out)
    }

    /// Replaces any subword that is more than half of a cyclic rotation of the
    /// relator (or its inverse) by the shorter complement, until none is left.
    pub(crate) fn dehn_reduce(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut w = free_reduce(letters);
        let Some(rlen) = self.rotations.first().map(|r| r.len()) else {
            return w;
        };
        let half = rlen / 2;
        'scan: loop {
            for i in 0..w.len() {
                for &rot in &self.starts[w[i].code()] {
                    let r = &self.rotations[rot];
                    let l = common_prefix_len(&w[i..], r);
                    if l > half {
                        let repl: Vec<Letter> = r[l..].iter().rev().map(|x| x.inverse()).collect();
                        w.splice(i..i + l, repl);
                        w = free_reduce(&w);
                        continue 'scan;
                    }
                }
            }
            return w;
        }
    }

    // Length-preserving rewrites: an exact half of a relator rotation is
    // swapped for the inverse of the other half.
    fn half_swaps(&self, w: &[Letter]) -> Vec<Vec<Letter>> {
        let half = self.rotations[0].len() / 2;
        let mut out = Vec::new();
        for i in 0..w.len() {
            for &rot in &self.starts[w[i].code()] {
                let r = &self.rotations[rot];
                if common_prefix_len(&w[i..], r) >= half {
                    let mut v = Vec::with_capacity(w.len());
                    v.extend_from_slice(&w[..i]);
                    v.extend(r[half..].iter().rev().map(|x| x.inverse()));
                    v.extend_from_slice(&w[i + half..]);
                    out.push(v);
                }
            }
        }
        out
    }

    fn surface_canonical(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut current = self.dehn_reduce(letters);
        'restart: loop {
            let mut seen: HashSet<Vec<Letter>> = HashSet::new();
            let mut queue = VecDeque::new();
            let mut best = current.clone();
            seen.insert(current.clone());
            queue.push_back(current.clone());
            while let Some(x) = queue.pop_front() {
                for y in self.half_swaps(&x) {
                    let y = self.dehn_reduce(&y);
                    if y.len() < x.len() {
                        current = y;
                        continue 'restart;
                    }
                    if seen.len() < HALF_SWAP_SEARCH_CAP && seen.insert(y.clone()) {
                        if shortlex_cmp(&y, &best) == Ordering::Less {
                            best = y.clone();
                        }
                        queue.push_back(y);
                    }
                }
            }
            return best;
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.model {
            GroupModel::Free(k) => write!(f, "free:{k}"),
            GroupModel::Surface(g) => write!(f, "surface:{g}"),
            GroupModel::FreeAbelian(k) => write!(f, "abelian:{k}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Parses `"free:2"`, `"surface:2"` or `"abelian:2"`.
    fn from_str(s: &str) -> Result<GroupSpec> {
        let (kind, n) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::input(format!("group spec {s:?} must look like free:2")))?;
        let n: usize = n
            .parse()
            .map_err(|_| Error::input(format!("bad parameter in group spec {s:?}")))?;
        let model = match kind {
            "free" => GroupModel::Free(n),
            "surface" => GroupModel::Surface(n),
            "abelian" => GroupModel::FreeAbelian(n),
            _ => return Err(Error::input(format!("unknown group model {kind:?}"))),
        };
        GroupSpec::new(model)
    }
}

pub(crate) fn free_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn common_prefix_len(a: &[Letter], b: &[Letter]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}
