//! The symmetric group 𝔖_k as the finite Weyl group of type A.
//!
//! Conventions shared by every module in the crate:
//!
//! * a [`Permutation`] stores its one-line notation, `w(i)` at index `i`;
//! * `w.compose(&v)` is `w ∘ v`, apply `v` first;
//! * the simple reflection `s_i` (1-based, `1 ≤ i < k`) swaps `i` and `i + 1`;
//! * a reduced word `(i_1, …, i_l)` stands for `s_{i_1} ∘ … ∘ s_{i_l}`;
//! * `w` acts on vectors by `(w·v)_i = v_{w⁻¹(i)}`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("not a permutation of 1..={k}: {line:?}")]
    NotAPermutation { k: usize, line: Vec<usize> },
    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),
    #[error("simple reflection index {i} out of range for rank {k}")]
    BadReflection { i: usize, k: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
}

/// Element of 𝔖_k; internally 0-based images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Self((0..k as u8).collect())
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(line: &[usize]) -> Result<Self, SymError> {
        let k = line.len();
        let mut seen = vec![false; k];
        for &x in line {
            if x == 0 || x > k || seen[x - 1] {
                return Err(SymError::NotAPermutation { k, line: line.to_vec() });
            }
            seen[x - 1] = true;
        }
        Ok(Self(line.iter().map(|&x| (x - 1) as u8).collect()))
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// The simple reflection `s_i`, 1-based.
    pub fn simple(k: usize, i: usize) -> Result<Self, SymError> {
        if i == 0 || i >= k {
            return Err(SymError::BadReflection { i, k });
        }
        let mut p = Self::identity(k);
        p.0.swap(i - 1, i);
        Ok(p)
    }

    pub fn longest(k: usize) -> Self {
        Self((0..k as u8).rev().collect())
    }

    /// Image of the 0-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.rank(), other.rank());
        Permutation(other.0.iter().map(|&j| self.0[j as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation(inv)
    }

    /// `self ∘ s_i`: swaps positions `i`, `i + 1` of the one-line notation.
    pub fn mul_simple_right(&self, i: usize) -> Permutation {
        let mut p = self.clone();
        p.0.swap(i - 1, i);
        p
    }

    /// `s_i ∘ self`: swaps the values `i`, `i + 1`.
    pub fn mul_simple_left(&self, i: usize) -> Permutation {
        let (a, b) = ((i - 1) as u8, i as u8);
        Permutation(
            self.0
                .iter()
                .map(|&x| if x == a { b } else if x == b { a } else { x })
                .collect(),
        )
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut n = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    n += 1;
                }
            }
        }
        n
    }

    /// `length(self ∘ s_i) < length(self)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// `length(s_i ∘ self) < length(self)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i - 1] > inv.0[i]
    }

    /// Lexicographically smallest reduced word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let k = self.rank();
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        // Peel the smallest left descent each round.
        while let Some(i) = (1..k).find(|&i| w.has_left_descent(i)) {
            word.push(i);
            w = w.mul_simple_left(i);
        }
        word
    }

    /// `s_{i_1} ∘ … ∘ s_{i_l}`.
    pub fn from_word(k: usize, word: &[usize]) -> Result<Self, SymError> {
        let mut w = Self::identity(k);
        for &i in word {
            if i == 0 || i >= k {
                return Err(SymError::BadReflection { i, k });
            }
            w = w.mul_simple_right(i);
        }
        Ok(w)
    }

    /// `(w·v)_i = v_{w⁻¹(i)}`.
    pub fn act<T: Clone>(&self, v: &[T]) -> Vec<T> {
        debug_assert_eq!(v.len(), self.rank());
        let mut out = v.to_vec();
        for (i, &wi) in self.0.iter().enumerate() {
            out[wi as usize] = v[i].clone();
        }
        out
    }

    /// All of 𝔖_k in lexicographic one-line order.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut out = Vec::with_capacity((1..=k).product());
        let mut cur: Vec<u8> = (0..k as u8).collect();
        loop {
            out.push(Permutation(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..k).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Ordered composition `(k_1, …, k_l)` of `k` with positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SymError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(SymError::InvalidComposition(parts));
        }
        Ok(Self(parts))
    }

    /// The composition `(k)`.
    pub fn full(k: usize) -> Self {
        Self(vec![k])
    }

    /// Multiplicities of equal runs of a sorted tuple, in order.
    pub fn of_runs<T: PartialEq>(sorted: &[T]) -> Self {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < sorted.len() {
            let mut j = i + 1;
            while j < sorted.len() && sorted[j] == sorted[i] {
                j += 1;
            }
            parts.push(j - i);
            i = j;
        }
        Self(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Order of the Young subgroup, `∏ k_i!`.
    pub fn young_order(&self) -> u64 {
        self.0.iter().map(|&p| factorial(p)).product()
    }

    /// All compositions of `k`, in lexicographic order of parts.
    pub fn all(k: usize) -> Vec<Composition> {
        fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(cur.clone()));
                return;
            }
            for p in 1..=rest {
                cur.push(p);
                rec(rest - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if k > 0 {
            rec(k, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Simple-reflection indices generating 𝔖_{k_1} × … × 𝔖_{k_l}.
pub fn young_subgroup(c: &Composition) -> BTreeSet<usize> {
    let k = c.total();
    let mut cuts = BTreeSet::new();
    let mut acc = 0;
    for &p in c.parts() {
        acc += p;
        cuts.insert(acc);
    }
    (1..k).filter(|i| !cuts.contains(i)).collect()
}

/// Minimal-length representatives of the left cosets `x W_J`.
pub fn min_coset_reps(k: usize, j: &BTreeSet<usize>) -> Vec<Permutation> {
    Permutation::all(k)
        .into_iter()
        .filter(|x| j.iter().all(|&i| !x.has_right_descent(i)))
        .collect()
}

/// Length-additive factorization `w = x ∘ u` with `u ∈ W_J` and `x` minimal in `x W_J`.
pub fn parabolic_decompose(w: &Permutation, j: &BTreeSet<usize>) -> (Permutation, Permutation) {
    let k = w.rank();
    let mut x = w.0.clone();
    // Sorting values inside each block of positions joined by J gives the minimal representative.
    let mut start = 0;
    for end in 1..=k {
        if end == k || !j.contains(&end) {
            x[start..end].sort_unstable();
            start = end;
        }
    }
    let x = Permutation(x);
    let u = x.inverse().compose(w);
    (x, u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(line: &[usize]) -> Permutation {
        Permutation::from_one_line(line).unwrap()
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity(3).length(), 0);
        assert_eq!(perm(&[2, 1, 3]).length(), 1);
        assert_eq!(Permutation::longest(4).length(), 6);
    }

    #[test]
    fn reduced_words() {
        assert_eq!(perm(&[2, 1, 3]).reduced_word(), vec![1]);
        assert!(Permutation::identity(3).reduced_word().is_empty());
        assert_eq!(perm(&[3, 1, 2]).reduced_word(), vec![2, 1]);
    }

    /// Brute-force oracle: every word of length l(w) whose product is w, lexicographically sorted.
    #[test]
    fn reduced_word_is_lex_smallest_by_search() {
        for k in 1..=4 {
            for w in Permutation::all(k) {
                let l = w.length();
                let mut best: Option<Vec<usize>> = None;
                let total = (k.saturating_sub(1)).pow(l as u32);
                for code in 0..total.max(1) {
                    if k == 1 && l > 0 {
                        break;
                    }
                    let mut c = code;
                    let word: Vec<usize> = (0..l)
                        .map(|_| {
                            let d = c % (k - 1) + 1;
                            c /= k - 1;
                            d
                        })
                        .rev()
                        .collect();
                    if Permutation::from_word(k, &word).unwrap() == w
                        && best.as_ref().is_none_or(|b| word < *b)
                    {
                        best = Some(word);
                    }
                }
                assert_eq!(Some(w.reduced_word()), best, "w = {w}");
            }
        }
    }

    #[test]
    fn young_subgroups() {
        assert_eq!(young_subgroup(&Composition::new(vec![2, 1]).unwrap()), set(&[1]));
        assert_eq!(young_subgroup(&Composition::new(vec![1, 1, 1]).unwrap()), set(&[]));
        assert_eq!(young_subgroup(&Composition::new(vec![3]).unwrap()), set(&[1, 2]));
        assert!(Composition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn coset_representatives() {
        assert_eq!(min_coset_reps(3, &set(&[1])).len(), 3);
        assert_eq!(min_coset_reps(3, &set(&[])).len(), 6);
        assert_eq!(min_coset_reps(3, &set(&[1, 2])), vec![Permutation::identity(3)]);
    }

    #[test]
    fn parabolic_decompositions() {
        let s1 = perm(&[2, 1, 3]);
        let s2 = perm(&[1, 3, 2]);
        assert_eq!(parabolic_decompose(&s1, &set(&[1])), (Permutation::identity(3), s1.clone()));
        assert_eq!(parabolic_decompose(&s2, &set(&[1])), (s2, Permutation::identity(3)));
        let (x, u) = parabolic_decompose(&Permutation::longest(3), &set(&[1]));
        assert_eq!(x.length(), 2);
        assert_eq!(u, s1);
    }

    #[test]
    fn action() {
        let s1 = perm(&[2, 1, 3]);
        assert_eq!(s1.act(&[1, 2, 3]), vec![2, 1, 3]);
        assert_eq!(Permutation::identity(3).act(&[5, 6, 7]), vec![5, 6, 7]);
    }

    #[test]
    fn length_changes_by_one_under_simple_reflections() {
        for k in 1..=5 {
            for w in Permutation::all(k) {
                for i in 1..k {
                    let l = w.length() as i64;
                    let l2 = w.mul_simple_right(i).length() as i64;
                    assert_eq!((l - l2).abs(), 1);
                    assert_eq!(w.has_right_descent(i), l2 < l);
                    assert_eq!(w.has_left_descent(i), (w.mul_simple_left(i).length() as i64) < l);
                }
            }
        }
    }

    #[test]
    fn reduced_words_round_trip() {
        for k in 1..=5 {
            for w in Permutation::all(k) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                assert_eq!(Permutation::from_word(k, &word).unwrap(), w);
            }
        }
    }

    #[test]
    fn parabolic_decomposition_is_unique() {
        for k in 1..=4 {
            let all = Permutation::all(k);
            let subsets: Vec<BTreeSet<usize>> = (0..1u32 << (k.saturating_sub(1)))
                .map(|m| (1..k).filter(|i| m >> (i - 1) & 1 == 1).collect())
                .collect();
            for j in &subsets {
                let wj: Vec<&Permutation> = all
                    .iter()
                    .filter(|u| u.reduced_word().iter().all(|i| j.contains(i)))
                    .collect();
                for w in &all {
                    let valid: Vec<(Permutation, Permutation)> = wj
                        .iter()
                        .map(|u| (w.compose(&u.inverse()), (*u).clone()))
                        .filter(|(x, u)| {
                            j.iter().all(|&i| !x.has_right_descent(i)) && x.length() + u.length() == w.length()
                        })
                        .collect();
                    assert_eq!(valid.len(), 1);
                    assert_eq!(valid[0], parabolic_decompose(w, j));
                }
            }
        }
    }

    #[test]
    fn coset_counts_are_multinomial() {
        for k in 1..=6 {
            for c in Composition::all(k) {
                let reps = min_coset_reps(k, &young_subgroup(&c));
                assert_eq!(reps.len() as u64, factorial(k) / c.young_order(), "{c}");
            }
        }
    }

    #[test]
    fn compositions_enumerate() {
        assert_eq!(Composition::all(4).len(), 8);
        assert_eq!(Composition::of_runs(&[0, 0, 1, 3, 3, 3]).parts(), &[2, 1, 3]);
    }
}
