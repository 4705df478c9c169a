//! The finite Hecke algebra ℋ(𝔖_k, q₀) in the `T_w` basis and its induced sign modules.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_rational::BigRational;
use thiserror::Error;

use crate::coeff::{CoeffError, RFMatrix, RatFunc};
use crate::symgroup::{
    min_coset_reps, parabolic_decompose, young_subgroup, Composition, Permutation, SymError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("composition {comp} does not sum to k = {k}")]
    CompositionRank { comp: Composition, k: usize },
    #[error("vector of length {got} for a module of dimension {dim}")]
    IndexMismatch { got: usize, dim: usize },
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// Finitely supported map `w ↦ coefficient` standing for `Σ c_w T_w`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    k: usize,
    terms: BTreeMap<Permutation, RatFunc>,
}

impl HeckeElement {
    pub fn zero(k: usize) -> Self {
        Self { k, terms: BTreeMap::new() }
    }

    pub fn one(k: usize) -> Self {
        Self::basis(&Permutation::identity(k))
    }

    /// `T_w`.
    pub fn basis(w: &Permutation) -> Self {
        Self::term(w.clone(), RatFunc::one())
    }

    pub fn term(w: Permutation, c: RatFunc) -> Self {
        let mut e = Self::zero(w.rank());
        e.add_term(w, c);
        e
    }

    /// `T_{s_i}`.
    pub fn simple(k: usize, i: usize) -> Result<Self, HeckeError> {
        Ok(Self::basis(&Permutation::simple(k, i)?))
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Permutation) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn add_term(&mut self, w: Permutation, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(w.rank(), self.k);
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &HeckeElement) -> Result<Self, HeckeError> {
        if self.k != other.k {
            return Err(HeckeError::RankMismatch(self.k, other.k));
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &HeckeElement) -> Result<Self, HeckeError> {
        self.add(&other.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero(self.k);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c})*T{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElement[k={}]({self})", self.k)
    }
}

/// ℋ(𝔖_k, q₀) with `q₀ = q^f` kept symbolic.
#[derive(Clone, Debug)]
pub struct FiniteHecke {
    k: usize,
    f: usize,
    q0: RatFunc,
    q0_minus_one: RatFunc,
}

impl FiniteHecke {
    pub fn new(k: usize, f: usize) -> Self {
        let q0 = RatFunc::q_power(f.max(1));
        let q0_minus_one = &q0 - &RatFunc::one();
        Self { k, f: f.max(1), q0, q0_minus_one }
    }

    /// Self-test hook: the quadratic structure constant is perturbed to `q₀`
    /// instead of `q₀ − 1`, so `T_s² = q₀ T_s + q₀`. Only the verification
    /// harness should build this.
    #[doc(hidden)]
    pub fn with_injected_fault(k: usize, f: usize) -> Self {
        let mut h = Self::new(k, f);
        h.q0_minus_one = h.q0.clone();
        h
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn exponent(&self) -> usize {
        self.f
    }

    /// The parameter `q₀`.
    pub fn q0(&self) -> &RatFunc {
        &self.q0
    }

    fn check(&self, a: &HeckeElement) -> Result<(), HeckeError> {
        if a.k != self.k {
            return Err(HeckeError::RankMismatch(self.k, a.k));
        }
        Ok(())
    }

    /// `x · T_{s_i}`.
    pub fn mul_simple_right(&self, x: &HeckeElement, i: usize) -> HeckeElement {
        let mut out = HeckeElement::zero(self.k);
        for (w, c) in &x.terms {
            let ws = w.mul_simple_right(i);
            if w.has_right_descent(i) {
                out.add_term(ws, c * &self.q0);
                out.add_term(w.clone(), c * &self.q0_minus_one);
            } else {
                out.add_term(ws, c.clone());
            }
        }
        out
    }

    /// `T_{s_i} · x`.
    pub fn mul_simple_left(&self, i: usize, x: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero(self.k);
        for (w, c) in &x.terms {
            let sw = w.mul_simple_left(i);
            if w.has_left_descent(i) {
                out.add_term(sw, c * &self.q0);
                out.add_term(w.clone(), c * &self.q0_minus_one);
            } else {
                out.add_term(sw, c.clone());
            }
        }
        out
    }

    /// `T_w · T_v`, expanding `T_v` along its reduced word.
    pub fn mul_basis(&self, w: &Permutation, v: &Permutation) -> HeckeElement {
        let mut acc = HeckeElement::basis(w);
        for i in v.reduced_word() {
            acc = self.mul_simple_right(&acc, i);
        }
        acc
    }

    pub fn multiply(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        self.check(a)?;
        self.check(b)?;
        let mut out = HeckeElement::zero(self.k);
        for (v, cb) in &b.terms {
            let word = v.reduced_word();
            let mut acc = a.clone();
            for &i in &word {
                acc = self.mul_simple_right(&acc, i);
            }
            for (w, c) in acc.terms {
                out.add_term(w, &c * cb);
            }
        }
        Ok(out)
    }

    /// Image of `a` under the sign character `T_w ↦ (−1)^{l(w)}`.
    pub fn sign(&self, a: &HeckeElement) -> RatFunc {
        a.terms.iter().fold(RatFunc::zero(), |acc, (w, c)| acc + &(c * &sign_value(w)))
    }

    /// Left action of `h` on a coefficient vector of `m`.
    pub fn module_act(
        &self,
        h: &HeckeElement,
        m: &InducedSignModule,
        v: &[RatFunc],
    ) -> Result<Vec<RatFunc>, HeckeError> {
        self.check(h)?;
        if m.k != self.k {
            return Err(HeckeError::RankMismatch(self.k, m.k));
        }
        if v.len() != m.dim() {
            return Err(HeckeError::IndexMismatch { got: v.len(), dim: m.dim() });
        }
        let mut out = vec![RatFunc::zero(); m.dim()];
        for (idx, vx) in v.iter().enumerate() {
            if vx.is_zero() {
                continue;
            }
            let x = &m.basis[idx];
            for (w, c) in &h.terms {
                let prod = self.mul_basis(w, x);
                let scale = c * vx;
                for (y, d) in prod.terms {
                    let (rep, u) = parabolic_decompose(&y, &m.generators);
                    let j = m.index[&rep];
                    let term = &d * &scale;
                    out[j] = if u.length() % 2 == 0 { &out[j] + &term } else { &out[j] - &term };
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `T_{s_i}` on `m`; column `j` is the image of the `j`-th basis vector.
    pub fn action_matrix(&self, m: &InducedSignModule, i: usize) -> Result<RFMatrix, HeckeError> {
        let ts = HeckeElement::simple(self.k, i)?;
        let dim = m.dim();
        let mut mat = RFMatrix::zeros(dim, dim);
        for col in 0..dim {
            let mut e = vec![RatFunc::zero(); dim];
            e[col] = RatFunc::one();
            for (row, x) in self.module_act(&ts, m, &e)?.into_iter().enumerate() {
                mat.set(row, col, x);
            }
        }
        Ok(mat)
    }

    /// Stacked system whose kernel is `Hom_{ℋ₀}(m, ε)`: rows of `(A_s + I)ᵀ` for every simple `s`.
    pub fn hom_to_sign_system(&self, m: &InducedSignModule) -> Result<RFMatrix, HeckeError> {
        let dim = m.dim();
        let mut system = RFMatrix::zeros(0, dim);
        for i in 1..self.k {
            let a = self.action_matrix(m, i)?.add(&RFMatrix::identity(dim))?;
            system = system.vstack(&a.transpose())?;
        }
        Ok(system)
    }

    /// `dim Hom_{ℋ₀}(m, ε)` computed exactly over ℚ(q).
    pub fn hom_to_sign_dim(&self, m: &InducedSignModule) -> Result<usize, HeckeError> {
        type HomCache = Mutex<HashMap<(usize, usize, Composition), usize>>;
        static CACHE: OnceLock<HomCache> = OnceLock::new();
        let key = (self.k, self.f, m.composition.clone());
        let cache = CACHE.get_or_init(Default::default);
        // The fault hook must never read or poison the cache.
        let faulty = self.q0_minus_one == self.q0;
        if !faulty {
            if let Some(&d) = cache.lock().expect("cache lock").get(&key) {
                return Ok(d);
            }
        }
        let system = self.hom_to_sign_system(m)?;
        let dim = system.cols() - system.rank();
        if !faulty {
            cache.lock().expect("cache lock").insert(key, dim);
        }
        Ok(dim)
    }

    /// Same Hom dimension with `q` specialized to a rational value.
    pub fn hom_to_sign_dim_at(&self, m: &InducedSignModule, q: &BigRational) -> Result<usize, HeckeError> {
        let system = self.hom_to_sign_system(m)?.eval(q)?;
        Ok(m.dim() - system.rank())
    }
}

/// `(−1)^{l(w)}` as a constant.
pub fn sign_value(w: &Permutation) -> RatFunc {
    if w.length().is_multiple_of(2) {
        RatFunc::one()
    } else {
        RatFunc::from_int(-1)
    }
}

/// ℋ₀ ⊗_{ℋ_J} ε_J with basis `{T_x ⊗ 1}` over minimal coset representatives `x`.
#[derive(Clone, Debug)]
pub struct InducedSignModule {
    k: usize,
    composition: Composition,
    generators: BTreeSet<usize>,
    basis: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl InducedSignModule {
    pub fn new(k: usize, composition: Composition) -> Result<Self, HeckeError> {
        if composition.total() != k {
            return Err(HeckeError::CompositionRank { comp: composition, k });
        }
        let generators = young_subgroup(&composition);
        let basis = min_coset_reps(k, &generators);
        let index = basis.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
        Ok(Self { k, composition, generators, basis, index })
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    pub fn generators(&self) -> &BTreeSet<usize> {
        &self.generators
    }

    pub fn basis(&self) -> &[Permutation] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, x: &Permutation) -> Option<usize> {
        self.index.get(x).copied()
    }
}

pub fn induced_sign_module(k: usize, j: Composition) -> Result<InducedSignModule, HeckeError> {
    InducedSignModule::new(k, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::IntPoly;

    fn perm(line: &[usize]) -> Permutation {
        Permutation::from_one_line(line).unwrap()
    }

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn quadratic_relation_on_basis() {
        let h = FiniteHecke::new(2, 1);
        let s = HeckeElement::simple(2, 1).unwrap();
        let sq = h.multiply(&s, &s).unwrap();
        let q = RatFunc::from_poly(IntPoly::q());
        assert_eq!(sq.coeff(&perm(&[2, 1])), &q - &RatFunc::one());
        assert_eq!(sq.coeff(&perm(&[1, 2])), q);
        assert_eq!(sq.len(), 2);
    }

    #[test]
    fn lengths_add() {
        let h = FiniteHecke::new(3, 1);
        let p = h
            .multiply(&HeckeElement::simple(3, 1).unwrap(), &HeckeElement::simple(3, 2).unwrap())
            .unwrap();
        let s1s2 = Permutation::simple(3, 1).unwrap().compose(&Permutation::simple(3, 2).unwrap());
        assert_eq!(p, HeckeElement::basis(&s1s2));
    }

    #[test]
    fn rank_mismatch_is_reported() {
        let h = FiniteHecke::new(3, 1);
        assert!(matches!(h.multiply(&HeckeElement::one(2), &HeckeElement::one(3)), Err(HeckeError::RankMismatch(..))));
    }

    #[test]
    fn sign_values() {
        assert!(sign_value(&Permutation::identity(3)).is_one());
        assert_eq!(sign_value(&perm(&[1, 3, 2])), RatFunc::from_int(-1));
        let s1s2 = Permutation::from_word(3, &[1, 2]).unwrap();
        assert!(sign_value(&s1s2).is_one());
    }

    #[test]
    fn induced_module_dimensions() {
        assert_eq!(induced_sign_module(3, comp(&[2, 1])).unwrap().dim(), 3);
        assert_eq!(induced_sign_module(3, comp(&[3])).unwrap().dim(), 1);
        assert_eq!(induced_sign_module(3, comp(&[1, 1, 1])).unwrap().dim(), 6);
        assert!(induced_sign_module(3, comp(&[2, 2])).is_err());
    }

    #[test]
    fn sign_on_full_parabolic() {
        let h = FiniteHecke::new(2, 1);
        let m = induced_sign_module(2, comp(&[2])).unwrap();
        let v = h.module_act(&HeckeElement::simple(2, 1).unwrap(), &m, &[RatFunc::one()]).unwrap();
        assert_eq!(v, vec![RatFunc::from_int(-1)]);
    }

    #[test]
    fn length_additive_action() {
        let h = FiniteHecke::new(3, 1);
        let m = induced_sign_module(3, comp(&[2, 1])).unwrap();
        let s2 = Permutation::simple(3, 2).unwrap();
        let mut v = vec![RatFunc::zero(); m.dim()];
        v[m.index_of(&s2).unwrap()] = RatFunc::one();
        let out = h.module_act(&HeckeElement::simple(3, 1).unwrap(), &m, &v).unwrap();
        let target = Permutation::simple(3, 1).unwrap().compose(&s2);
        let mut expect = vec![RatFunc::zero(); m.dim()];
        expect[m.index_of(&target).unwrap()] = RatFunc::one();
        assert_eq!(out, expect);
    }

    #[test]
    fn module_act_rejects_wrong_length() {
        let h = FiniteHecke::new(3, 1);
        let m = induced_sign_module(3, comp(&[2, 1])).unwrap();
        assert!(matches!(
            h.module_act(&HeckeElement::one(3), &m, &[RatFunc::one()]),
            Err(HeckeError::IndexMismatch { .. })
        ));
    }

    #[test]
    fn hom_dims_small() {
        let h3 = FiniteHecke::new(3, 1);
        assert_eq!(h3.hom_to_sign_dim(&induced_sign_module(3, comp(&[2, 1])).unwrap()).unwrap(), 1);
        let h2 = FiniteHecke::new(2, 1);
        assert_eq!(h2.hom_to_sign_dim(&induced_sign_module(2, comp(&[1, 1])).unwrap()).unwrap(), 1);
    }

    #[test]
    fn injected_fault_breaks_quadratic_relation() {
        let h = FiniteHecke::with_injected_fault(2, 1);
        let s = HeckeElement::simple(2, 1).unwrap();
        let lhs = h.multiply(&s, &s).unwrap();
        let q = h.q0().clone();
        let expected = HeckeElement::term(perm(&[2, 1]), &q - &RatFunc::one())
            .add(&HeckeElement::term(Permutation::identity(2), q))
            .unwrap();
        assert_ne!(lhs, expected);
    }
}
