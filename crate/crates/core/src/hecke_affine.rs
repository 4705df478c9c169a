//! The affine Hecke algebra `ℂ[Y] ⊗ ℋ(𝔖_k, q₀)` over the lattice `Y = T(𝔟,ϱ)` in
//! Bernstein presentation, and the Gelfand-Graev module built from orbits of X(λ).
//!
//! Elements are stored in lattice-left normal form `Σ c · φ_t T_w`. The commutation
//! rule is, for a simple reflection `s = s_i` and `t ∈ Y`,
//!
//! ```text
//! φ_t T_s − T_s φ_{s·t} = (q₀ − 1) (φ_t − φ_{s·t}) / (φ_0 − φ_{−α̃})
//! ```
//!
//! where `α̃ = m (e_i − e_{i+1})` and `m` is the smallest positive multiple of
//! `e_i − e_{i+1}` lying in `Y`. The quotient is a finite geometric sum.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use thiserror::Error;

use crate::coeff::{IntPoly, RatFunc};
use crate::cover::{self, CoverError, CoverKind, CoverSpec, OrbitRecord, QuotientGroup, TypeSpec};
use crate::hecke_finite::{FiniteHecke, HeckeElement, HeckeError, InducedSignModule};
use crate::symgroup::{Permutation, SymError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffineError {
    #[error("{0:?} is not in the lattice")]
    NotInLattice(Vec<i64>),
    #[error("t_i - t_(i+1) = {diff} is not a multiple of the coroot multiplier {multiplier}")]
    CorootDivisibility { diff: i64, multiplier: i64 },
    #[error("lattice mismatch between operands")]
    LatticeMismatch,
    #[error("lattice is not stable under coordinate permutations")]
    NotSymmetric,
    #[error("orbit {0:?} has a stabilizer that is not a standard Young subgroup")]
    NonYoungStabilizer(Vec<i64>),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

/// The lattice `Y ⊆ ℤ^k` with its coroot normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSpec {
    group: QuotientGroup,
    coroot_multiplier: i64,
}

impl LatticeSpec {
    pub fn new(group: QuotientGroup) -> Result<Self, AffineError> {
        if !group.is_symmetric() {
            return Err(AffineError::NotSymmetric);
        }
        let coroot_multiplier = cover::coroot_multiplier(&group)?;
        Ok(Self { group, coroot_multiplier })
    }

    /// `Y = T(𝔟,ϱ)` for the given cover and type.
    pub fn for_type(cov: &CoverSpec, ty: &TypeSpec) -> Result<Self, AffineError> {
        Self::new(cover::x_lambda(cov, ty)?)
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    /// ℤ-basis of `Y`, one vector per row.
    pub fn basis(&self) -> &[Vec<i64>] {
        self.group.relation_lattice()
    }

    pub fn coroot_multiplier(&self) -> i64 {
        self.coroot_multiplier
    }

    pub fn contains(&self, t: &[i64]) -> bool {
        t.len() == self.rank() && self.group.contains(t)
    }

    pub fn quotient(&self) -> &QuotientGroup {
        &self.group
    }

    /// `α̃∨ = m (e_i − e_{i+1})`, `i` 1-based.
    pub fn coroot(&self, i: usize) -> Vec<i64> {
        (0..self.rank())
            .map(|j| {
                if j + 1 == i {
                    self.coroot_multiplier
                } else if j == i {
                    -self.coroot_multiplier
                } else {
                    0
                }
            })
            .collect()
    }
}

type Key = (Vec<i64>, Permutation);

/// `Σ c · φ_t T_w` with nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct AffineElement {
    k: usize,
    terms: BTreeMap<Key, RatFunc>,
}

impl AffineElement {
    pub fn zero(k: usize) -> Self {
        Self { k, terms: BTreeMap::new() }
    }

    pub fn term(t: Vec<i64>, w: Permutation, c: RatFunc) -> Self {
        let mut e = Self::zero(w.rank());
        e.add_term(t, w, c);
        e
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Permutation, &RatFunc)> {
        self.terms.iter().map(|((t, w), c)| (t, w, c))
    }

    pub fn coeff(&self, t: &[i64], w: &Permutation) -> RatFunc {
        self.terms.get(&(t.to_vec(), w.clone())).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn add_term(&mut self, t: Vec<i64>, w: Permutation, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((t, w)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &AffineElement) -> AffineElement {
        let mut out = self.clone();
        for ((t, w), c) in &other.terms {
            out.add_term(t.clone(), w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AffineElement) -> AffineElement {
        self.add(&other.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> AffineElement {
        let mut out = Self::zero(self.k);
        for ((t, w), x) in &self.terms {
            out.add_term(t.clone(), w.clone(), x * c);
        }
        out
    }

    /// True when every term has finite part `T_e`.
    pub fn is_lattice_only(&self) -> bool {
        self.terms.keys().all(|(_, w)| w.is_identity())
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|((t, w), c)| format!("({c})*phi{t:?}*T{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineElement({self})")
    }
}

/// `φ_t T_s = T_s φ_{swapped} + lattice_part`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernsteinCross {
    pub swapped: Vec<i64>,
    pub lattice_part: AffineElement,
}

/// The algebra `ℂ[Y] ⊗ ℋ(𝔖_k, q₀)`.
#[derive(Clone, Debug)]
pub struct AffineHecke {
    lattice: LatticeSpec,
    finite: FiniteHecke,
}

impl AffineHecke {
    pub fn new(lattice: LatticeSpec, f: usize) -> Self {
        let k = lattice.rank();
        Self { lattice, finite: FiniteHecke::new(k, f) }
    }

    pub fn lattice(&self) -> &LatticeSpec {
        &self.lattice
    }

    pub fn finite(&self) -> &FiniteHecke {
        &self.finite
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    fn check_t(&self, t: &[i64]) -> Result<(), AffineError> {
        if !self.lattice.contains(t) {
            return Err(AffineError::NotInLattice(t.to_vec()));
        }
        Ok(())
    }

    /// `φ_t`.
    pub fn phi(&self, t: &[i64]) -> Result<AffineElement, AffineError> {
        self.check_t(t)?;
        Ok(AffineElement::term(t.to_vec(), Permutation::identity(self.rank()), RatFunc::one()))
    }

    /// `T_w`.
    pub fn t(&self, w: &Permutation) -> AffineElement {
        AffineElement::term(vec![0; self.rank()], w.clone(), RatFunc::one())
    }

    pub fn t_simple(&self, i: usize) -> Result<AffineElement, AffineError> {
        Ok(self.t(&Permutation::simple(self.rank(), i)?))
    }

    /// Embeds a finite Hecke element.
    pub fn from_finite(&self, h: &HeckeElement) -> AffineElement {
        let mut out = AffineElement::zero(self.rank());
        for (w, c) in h.terms() {
            out.add_term(vec![0; self.rank()], w.clone(), c.clone());
        }
        out
    }

    /// `(q₀ − 1)(φ_t − φ_{s·t}) / (φ_0 − φ_{−α̃})` expanded as a geometric sum.
    fn lattice_correction(&self, t: &[i64], i: usize) -> Result<AffineElement, AffineError> {
        let k = self.rank();
        let m = self.lattice.coroot_multiplier;
        let diff = t[i - 1] - t[i];
        if diff % m != 0 {
            return Err(AffineError::CorootDivisibility { diff, multiplier: m });
        }
        let steps = diff / m;
        let alpha = self.lattice.coroot(i);
        let c = &self.finite.q0().clone() - &RatFunc::one();
        let e = Permutation::identity(k);
        let mut out = AffineElement::zero(k);
        let shifted = |j: i64| -> Vec<i64> { t.iter().zip(&alpha).map(|(x, a)| x + j * a).collect() };
        if steps > 0 {
            // φ_t (1 − x^{-steps}) / (1 − x^{-1}) = Σ_{j<steps} φ_{t − jα̃}
            for j in 0..steps {
                out.add_term(shifted(-j), e.clone(), c.clone());
            }
        } else if steps < 0 {
            // φ_t (1 − x^{|steps|}) / (1 − x^{-1}) = −Σ_{1≤j≤|steps|} φ_{t + jα̃}
            for j in 1..=-steps {
                out.add_term(shifted(j), e.clone(), -&c);
            }
        }
        Ok(out)
    }

    /// Rewrites `φ_t T_{s_i}` as `T_{s_i} φ_{s_i·t}` plus a pure lattice part.
    pub fn bernstein_cross(&self, t: &[i64], i: usize) -> Result<BernsteinCross, AffineError> {
        self.check_t(t)?;
        let s = Permutation::simple(self.rank(), i)?;
        Ok(BernsteinCross { swapped: s.act(t), lattice_part: self.lattice_correction(t, i)? })
    }

    /// `T_{s_i} · x`, using `T_s φ_u = φ_{s·u} T_s − C(s·u)`.
    fn mul_simple_left(&self, i: usize, x: &AffineElement) -> Result<AffineElement, AffineError> {
        let k = self.rank();
        let s = Permutation::simple(k, i)?;
        let mut out = AffineElement::zero(k);
        for ((u, y), c) in &x.terms {
            let su = s.act(u);
            let ty = self.finite.mul_simple_left(i, &HeckeElement::basis(y));
            for (w, d) in ty.terms() {
                out.add_term(su.clone(), w.clone(), c * d);
            }
            let corr = self.lattice_correction(&su, i)?;
            for ((v, _), d) in corr.terms {
                out.add_term(v, y.clone(), -&(c * &d));
            }
        }
        Ok(out)
    }

    /// `T_w φ_u` in normal form.
    pub fn t_times_phi(&self, w: &Permutation, u: &[i64]) -> Result<AffineElement, AffineError> {
        let mut acc = self.phi(u)?;
        for &i in w.reduced_word().iter().rev() {
            acc = self.mul_simple_left(i, &acc)?;
        }
        Ok(acc)
    }

    pub fn multiply(&self, a: &AffineElement, b: &AffineElement) -> Result<AffineElement, AffineError> {
        let k = self.rank();
        if a.k != k || b.k != k {
            return Err(AffineError::LatticeMismatch);
        }
        for (t, _, _) in a.terms().chain(b.terms()) {
            self.check_t(t)?;
        }
        let mut out = AffineElement::zero(k);
        for ((t, w), c) in &a.terms {
            for ((u, v), d) in &b.terms {
                let cd = c * d;
                let mid = self.t_times_phi(w, u)?;
                for ((x, y), e) in &mid.terms {
                    let prod = self.finite.mul_basis(y, v);
                    let shift: Vec<i64> = t.iter().zip(x).map(|(p, q)| p + q).collect();
                    for (z, g) in prod.terms() {
                        out.add_term(shift.clone(), z.clone(), &(e * g) * &cd);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Expands `T_w φ_{−t}` in the basis `φ_{−t'} T_{w'}` and audits it.
    pub fn check_twphi_lemma(&self, w: &Permutation, t: &[i64]) -> Result<TwPhiReport, AffineError> {
        let neg: Vec<i64> = t.iter().map(|x| -x).collect();
        let product = self.t_times_phi(w, &neg)?;
        let mut terms = Vec::new();
        let mut violations = Vec::new();
        let ord_t = cover::ord(t);
        for ((u, w2), c) in &product.terms {
            let t2: Vec<i64> = u.iter().map(|x| -x).collect();
            if w2.length() > w.length() {
                violations.push(format!("T{w2} longer than T{w}"));
            }
            if cover::ord(&t2) != ord_t {
                violations.push(format!("ord {:?} = {} differs from ord {t:?} = {ord_t}", t2, cover::ord(&t2)));
            }
            if !has_nonnegative_expansion(c) {
                violations.push(format!("coefficient {c} of phi{u:?}*T{w2} is not a non-negative integer polynomial in q0 - 1"));
            }
            terms.push(TwPhiTerm { t: t2, w: w2.clone(), coeff: c.clone() });
        }
        Ok(TwPhiReport { w: w.clone(), t: t.to_vec(), terms, violations })
    }
}

/// Polynomial whose expansion in powers of `q − 1` has non-negative integer
/// coefficients; such a value is a non-negative integer at every `q₀ ≥ 1`.
pub fn has_nonnegative_expansion(c: &RatFunc) -> bool {
    c.as_polynomial()
        .is_some_and(|p| p.shift_by_one().coeffs().iter().all(|x| x.sign() != num_bigint::Sign::Minus))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwPhiTerm {
    pub t: Vec<i64>,
    pub w: Permutation,
    pub coeff: RatFunc,
}

/// Expansion of `T_w φ_{t⁻¹}` with any failed expectations listed in `violations`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwPhiReport {
    pub w: Permutation,
    pub t: Vec<i64>,
    pub terms: Vec<TwPhiTerm>,
    pub violations: Vec<String>,
}

impl TwPhiReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// One summand `𝒜 ⊗ (ℋ₀ ⊗_{ℋ_𝒪} ε_𝒪)` of the Gelfand-Graev module.
#[derive(Clone, Debug)]
pub struct GGBlock {
    pub orbit: OrbitRecord,
    pub module: InducedSignModule,
}

#[derive(Clone, Debug)]
pub struct GGModule {
    pub blocks: Vec<GGBlock>,
    pub lattice: LatticeSpec,
    pub f: usize,
}

impl GGModule {
    /// Rank over `𝒜 = ℂ[Y]`.
    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.module.dim()).sum()
    }

    /// `Σ_blocks dim Hom_{ℋ₀}(block, ε)`; the `𝒜` factor is discharged by restricting to the finite part.
    pub fn whittaker_dim(&self) -> Result<usize, AffineError> {
        let h = FiniteHecke::new(self.lattice.rank(), self.f);
        self.blocks.iter().map(|b| Ok(h.hom_to_sign_dim(&b.module)?)).sum()
    }

    /// The same count with `q` specialized.
    pub fn whittaker_dim_at(&self, q: &BigRational) -> Result<usize, AffineError> {
        let h = FiniteHecke::new(self.lattice.rank(), self.f);
        self.blocks.iter().map(|b| Ok(h.hom_to_sign_dim_at(&b.module, q)?)).sum()
    }
}

fn require_proved_kind(cov: &CoverSpec, what: &'static str) -> Result<(), AffineError> {
    if cov.kind() == CoverKind::Generic {
        return Err(CoverError::UnsupportedKind(what).into());
    }
    Ok(())
}

/// One block per 𝔖_k-orbit of X(λ).
pub fn gg_module(cov: &CoverSpec, ty: &TypeSpec, bound: u64) -> Result<GGModule, AffineError> {
    require_proved_kind(cov, "the Gelfand-Graev module")?;
    let lattice = LatticeSpec::for_type(cov, ty)?;
    let orbits = lattice.quotient().orbits(bound)?;
    let k = ty.k();
    let blocks = orbits
        .into_iter()
        .map(|orbit| {
            let comp = orbit
                .stabilizer
                .clone()
                .ok_or_else(|| AffineError::NonYoungStabilizer(orbit.representative.clone()))?;
            Ok(GGBlock { module: InducedSignModule::new(k, comp)?, orbit })
        })
        .collect::<Result<Vec<_>, AffineError>>()?;
    Ok(GGModule { blocks, lattice, f: ty.f() as usize })
}

pub fn whittaker_dim_hecke(cov: &CoverSpec, ty: &TypeSpec, bound: u64) -> Result<usize, AffineError> {
    gg_module(cov, ty, bound)?.whittaker_dim()
}

/// `q₀ − 1` as a polynomial, handy in tests and reports.
pub fn q0_minus_one(f: usize) -> RatFunc {
    RatFunc::from_poly(&IntPoly::monomial(1, f) - &IntPoly::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn savin_k2() -> AffineHecke {
        let cov = CoverSpec::savin(4).unwrap();
        let ty = TypeSpec::new(2, 2, 1, 1).unwrap();
        AffineHecke::new(LatticeSpec::for_type(&cov, &ty).unwrap(), 1)
    }

    fn lat(alg: &AffineHecke, t: &[i64]) -> AffineElement {
        alg.phi(t).unwrap()
    }

    #[test]
    fn savin_lattice_normalization() {
        let alg = savin_k2();
        assert_eq!(alg.lattice().coroot_multiplier(), 2);
        assert_eq!(alg.lattice().basis(), &[vec![2, 0], vec![0, 2]]);
    }

    #[test]
    fn commuting_case_has_empty_lattice_part() {
        let alg = savin_k2();
        let x = alg.bernstein_cross(&[2, 2], 1).unwrap();
        assert_eq!(x.swapped, vec![2, 2]);
        assert!(x.lattice_part.is_zero());
    }

    #[test]
    fn geometric_sums() {
        let alg = savin_k2();
        let e = Permutation::identity(2);
        let c = q0_minus_one(1);
        let x = alg.bernstein_cross(&[2, 0], 1).unwrap();
        assert_eq!(x.swapped, vec![0, 2]);
        assert_eq!(x.lattice_part, AffineElement::term(vec![2, 0], e.clone(), c.clone()));
        let x = alg.bernstein_cross(&[4, 0], 1).unwrap();
        let expect = AffineElement::term(vec![4, 0], e.clone(), c.clone())
            .add(&AffineElement::term(vec![2, 2], e.clone(), c.clone()));
        assert_eq!(x.lattice_part, expect);
        let x = alg.bernstein_cross(&[0, 2], 1).unwrap();
        assert_eq!(x.lattice_part, AffineElement::term(vec![2, 0], e, -&c));
    }

    #[test]
    fn geometric_sum_times_denominator_recovers_numerator() {
        // (φ_0 − φ_{−α̃}) · lattice_part = (q₀ − 1)(φ_t − φ_{s·t})
        let alg = savin_k2();
        let alpha = alg.lattice().coroot(1);
        let neg_alpha: Vec<i64> = alpha.iter().map(|x| -x).collect();
        let denom = lat(&alg, &[0, 0]).sub(&lat(&alg, &neg_alpha));
        for t in [[4, 0], [2, 0], [0, 4], [6, -2], [2, 2]] {
            let x = alg.bernstein_cross(&t, 1).unwrap();
            let lhs = alg.multiply(&denom, &x.lattice_part).unwrap();
            let rhs = lat(&alg, &t).sub(&lat(&alg, &x.swapped)).scale(&q0_minus_one(1));
            assert_eq!(lhs, rhs, "t = {t:?}");
        }
    }

    #[test]
    fn lattice_subalgebra() {
        let alg = savin_k2();
        let p = alg.multiply(&lat(&alg, &[2, 0]), &lat(&alg, &[4, -2])).unwrap();
        assert_eq!(p, lat(&alg, &[6, -2]));
    }

    #[test]
    fn quadratic_relation() {
        let alg = savin_k2();
        let ts = alg.t_simple(1).unwrap();
        let one = alg.t(&Permutation::identity(2));
        let q0 = alg.finite().q0().clone();
        let p = alg.multiply(&ts.add(&one), &ts.sub(&one.scale(&q0))).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn not_in_lattice() {
        let alg = savin_k2();
        assert!(matches!(alg.phi(&[1, 0]), Err(AffineError::NotInLattice(_))));
        assert!(matches!(alg.bernstein_cross(&[1, 1], 1), Err(AffineError::NotInLattice(_))));
    }

    #[test]
    fn twphi_examples() {
        let alg = savin_k2();
        let e = Permutation::identity(2);
        let s = Permutation::simple(2, 1).unwrap();
        let r = alg.check_twphi_lemma(&e, &[2, 4]).unwrap();
        assert_eq!(r.terms.len(), 1);
        assert_eq!(r.terms[0].t, vec![2, 4]);
        let r = alg.check_twphi_lemma(&s, &[2, 2]).unwrap();
        assert_eq!(r.terms, vec![TwPhiTerm { t: vec![2, 2], w: s.clone(), coeff: RatFunc::one() }]);
        let r = alg.check_twphi_lemma(&s, &[0, 2]).unwrap();
        assert!(r.is_ok(), "{:?}", r.violations);
        let coeffs: Vec<RatFunc> = r.terms.iter().map(|x| x.coeff.clone()).collect();
        assert!(coeffs.contains(&RatFunc::one()) && coeffs.contains(&q0_minus_one(1)));
        assert!(r.terms.iter().all(|x| cover::ord(&x.t) == 2));
    }

    #[test]
    fn gg_module_worked_instances() {
        let ty = TypeSpec::new(2, 2, 1, 1).unwrap();
        let m = gg_module(&CoverSpec::kp(4, 0).unwrap(), &ty, 1_000).unwrap();
        assert_eq!(m.blocks.len(), 10);
        assert_eq!(m.rank(), 16);
        assert_eq!(m.whittaker_dim().unwrap(), 10);
        let m = gg_module(&CoverSpec::savin(4).unwrap(), &ty, 1_000).unwrap();
        let mut dims: Vec<usize> = m.blocks.iter().map(|b| b.module.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 2]);
        assert_eq!(m.whittaker_dim().unwrap(), 3);
        let ty1 = TypeSpec::new(3, 3, 1, 1).unwrap();
        let m = gg_module(&CoverSpec::kp(1, 0).unwrap(), &ty1, 1_000).unwrap();
        assert_eq!(m.blocks.len(), 1);
        assert_eq!(m.rank(), 1);
        assert!(matches!(
            gg_module(&CoverSpec::generic(4, 1, 1).unwrap(), &ty, 1_000),
            Err(AffineError::Cover(CoverError::UnsupportedKind(_)))
        ));
    }
}
