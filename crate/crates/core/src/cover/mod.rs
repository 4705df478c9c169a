//! Cover and simple-type parameters, the finite group X(λ) = T(𝔟)/T(𝔟,ϱ) with its
//! 𝔖_k-action, and the closed-form Whittaker-dimension counts.
//!
//! A torus element `diag(ϖ^{s_1} I, …, ϖ^{s_k} I)` of T(𝔟) is modelled by its
//! exponent vector `(s_1, …, s_k) ∈ ℤ^k`; T(𝔟,ϱ) is the sublattice cut out by
//!
//! ```text
//! l0 · [ (s_1 + … + s_k)(2c + d) r0 − d s_i ] ≡ 0  (mod n),   i = 1..k
//! ```

pub mod lattice;
mod quotient;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use quotient::{OrbitRecord, QuotientGroup};

/// Default ceiling on |X(λ)| for exhaustive enumeration.
pub const DEFAULT_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("invalid cover: {0}")]
    InvalidCover(String),
    #[error("invalid type: {0}")]
    InvalidType(String),
    #[error("k = {k} does not divide r = {r}")]
    KDoesNotDivideR { k: i64, r: i64 },
    #[error("l0 = {l0} does not divide n = {n}")]
    L0DoesNotDivideN { l0: i64, n: i64 },
    #[error("|X(λ)| = {order} exceeds the enumeration bound {bound}")]
    BoundExceeded { order: u64, bound: u64 },
    #[error("{what}: expected {expected}, got {got}")]
    OrderMismatch { what: &'static str, expected: u64, got: u64 },
    #[error("{0} is only defined for Kazhdan-Patterson and Savin covers")]
    UnsupportedKind(&'static str),
    #[error("closed form is not an integer: {0}")]
    NotIntegral(String),
    #[error("torus elements {0:?} and {1:?} are not equivalent modulo T(b,rho)")]
    NotEquivalent(Vec<i64>, Vec<i64>),
    #[error("lemma violated: {0}")]
    LemmaViolation(String),
    #[error("degenerate lattice: {0}")]
    Degenerate(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverKind {
    Kp,
    Savin,
    Generic,
}

impl fmt::Display for CoverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverKind::Kp => "kp",
            CoverKind::Savin => "savin",
            CoverKind::Generic => "generic",
        })
    }
}

impl FromStr for CoverKind {
    type Err = CoverError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "kp" => Ok(CoverKind::Kp),
            "savin" => Ok(CoverKind::Savin),
            "generic" => Ok(CoverKind::Generic),
            other => Err(CoverError::InvalidCover(format!("unknown kind {other:?}"))),
        }
    }
}

/// An `n`-fold cover with cocycle `σ_det^c · σ_KP^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CoverSpec {
    n: i64,
    c: i64,
    d: i64,
    kind: CoverKind,
}

impl CoverSpec {
    pub fn new(kind: CoverKind, n: i64, c: i64, d: i64) -> Result<Self, CoverError> {
        if n < 1 {
            return Err(CoverError::InvalidCover(format!("n = {n} must be positive")));
        }
        match kind {
            CoverKind::Kp if d != 1 => Err(CoverError::InvalidCover(format!("Kazhdan-Patterson covers have d = 1, got {d}"))),
            CoverKind::Savin if (c, d) != (-1, 2) => {
                Err(CoverError::InvalidCover(format!("the Savin cover has (c, d) = (-1, 2), got ({c}, {d})")))
            }
            _ => Ok(Self { n, c, d, kind }),
        }
    }

    pub fn kp(n: i64, c: i64) -> Result<Self, CoverError> {
        Self::new(CoverKind::Kp, n, c, 1)
    }

    pub fn savin(n: i64) -> Result<Self, CoverError> {
        Self::new(CoverKind::Savin, n, -1, 2)
    }

    pub fn generic(n: i64, c: i64, d: i64) -> Result<Self, CoverError> {
        Self::new(CoverKind::Generic, n, c, d)
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn kind(&self) -> CoverKind {
        self.kind
    }
}

/// Combinatorial data of a simple type: GL rank `r`, `k` blocks, twist order `l0`,
/// and `q₀ = q^f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TypeSpec {
    r: i64,
    k: i64,
    l0: i64,
    f: u32,
}

impl TypeSpec {
    pub fn new(r: i64, k: i64, l0: i64, f: u32) -> Result<Self, CoverError> {
        if r < 1 || k < 1 || l0 < 1 || f < 1 {
            return Err(CoverError::InvalidType(format!("r, k, l0, f must be positive (r={r}, k={k}, l0={l0}, f={f})")));
        }
        if r % k != 0 {
            return Err(CoverError::KDoesNotDivideR { k, r });
        }
        Ok(Self { r, k, l0, f })
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn k(&self) -> usize {
        self.k as usize
    }

    pub fn l0(&self) -> i64 {
        self.l0
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn check_against(&self, cov: &CoverSpec) -> Result<(), CoverError> {
        if cov.n % self.l0 != 0 {
            return Err(CoverError::L0DoesNotDivideN { l0: self.l0, n: cov.n });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DerivedParams {
    pub r0: i64,
    pub n0: i64,
    pub d0: i64,
}

/// `n₀ = n / gcd(n, (2c+d) r₀ l₀, d l₀)` and `d₀ = n / gcd(n, l₀ (2cr + dr − d))`.
pub fn derive_params(cov: &CoverSpec, ty: &TypeSpec) -> Result<DerivedParams, CoverError> {
    ty.check_against(cov)?;
    let (n, c, d) = (cov.n, cov.c, cov.d);
    let (r, k, l0) = (ty.r, ty.k, ty.l0);
    let r0 = r / k;
    let g0 = n.gcd(&((2 * c + d) * r0 * l0)).gcd(&(d * l0));
    let n0 = n / g0;
    let d0 = n / n.gcd(&(l0 * (2 * c * r + d * r - d)));
    if n0 % d0 != 0 || n % n0 != 0 {
        return Err(CoverError::LemmaViolation(format!("d0 = {d0} must divide n0 = {n0}, which divides n = {n}")));
    }
    Ok(DerivedParams { r0, n0, d0 })
}

/// The `k × k` integer matrix of the congruence system defining T(𝔟,ϱ).
pub fn congruence_matrix(cov: &CoverSpec, ty: &TypeSpec) -> Vec<Vec<i64>> {
    let k = ty.k();
    let r0 = ty.r / ty.k;
    let common = ty.l0 * (2 * cov.c + cov.d) * r0;
    (0..k)
        .map(|i| (0..k).map(|j| common - if i == j { ty.l0 * cov.d } else { 0 }).collect())
        .collect()
}

/// Membership of the exponent vector `t` in T(𝔟,ϱ).
pub fn in_t_brho(cov: &CoverSpec, ty: &TypeSpec, t: &[i64]) -> bool {
    let r0 = ty.r / ty.k;
    let sum: i64 = t.iter().sum();
    t.iter()
        .all(|&s| (ty.l0 * (sum * (2 * cov.c + cov.d) * r0 - s * cov.d)).rem_euclid(cov.n) == 0)
}

/// X(λ) as a finite abelian group, built from the congruence system.
///
/// For Kazhdan-Patterson covers the order is checked against `n₀^{k−1} d₀` and
/// for the Savin cover against `n₀^k`; a mismatch is reported as an error.
pub fn x_lambda(cov: &CoverSpec, ty: &TypeSpec) -> Result<QuotientGroup, CoverError> {
    let p = derive_params(cov, ty)?;
    let g = QuotientGroup::from_congruences(&congruence_matrix(cov, ty), cov.n)?;
    let k = ty.k() as u32;
    let expected = match cov.kind {
        CoverKind::Kp => Some((p.n0 as u64).pow(k - 1) * p.d0 as u64),
        CoverKind::Savin => Some((p.n0 as u64).pow(k)),
        CoverKind::Generic => None,
    };
    if let Some(expected) = expected {
        let got: u64 = g.invariant_factors().iter().map(|&x| x as u64).product();
        if got != expected {
            return Err(CoverError::OrderMismatch { what: "|X(lambda)|", expected, got });
        }
    }
    Ok(g)
}

/// Coordinate sum.
pub fn ord(t: &[i64]) -> i64 {
    t.iter().sum()
}

fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

/// `C(k+n₀−1, k) · d₀/n₀` for Kazhdan-Patterson covers, `C(k+n₀−1, k)` for Savin.
pub fn whittaker_dim_closed(cov: &CoverSpec, ty: &TypeSpec) -> Result<u64, CoverError> {
    let p = derive_params(cov, ty)?;
    let k = ty.k() as u64;
    let b = binomial(k + p.n0 as u64 - 1, k);
    let value = match cov.kind {
        CoverKind::Kp => {
            let num = b * p.d0 as u128;
            if !num.is_multiple_of(p.n0 as u128) {
                return Err(CoverError::NotIntegral(format!("{b}*{}/{}", p.d0, p.n0)));
            }
            num / p.n0 as u128
        }
        CoverKind::Savin => b,
        CoverKind::Generic => return Err(CoverError::UnsupportedKind("the closed-form dimension")),
    };
    u64::try_from(value).map_err(|_| CoverError::NotIntegral(format!("{value} overflows")))
}

/// Checks `n₀/d₀ = gcd(n/l₀, 2cr + r − 1)` and `gcd(n₀/d₀, k) = 1`.
pub fn verify_kp_lemma(cov: &CoverSpec, ty: &TypeSpec) -> Result<bool, CoverError> {
    if cov.kind != CoverKind::Kp {
        return Err(CoverError::UnsupportedKind("the gcd lemma"));
    }
    let p = derive_params(cov, ty)?;
    let ratio = p.n0 / p.d0;
    let rhs = (cov.n / ty.l0).gcd(&(2 * cov.c * ty.r + ty.r - 1));
    Ok(ratio == rhs && ratio.gcd(&ty.k) == 1)
}

/// Nondecreasing tuples in `{0, …, n₀−1}^k`, in lexicographic order.
fn sorted_box(k: usize, n0: i64) -> Vec<Vec<i64>> {
    fn rec(k: usize, lo: i64, n0: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in lo..n0 {
            cur.push(x);
            rec(k, x, n0, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, 0, n0, &mut Vec::new(), &mut out);
    out
}

/// Sorted box representatives: all of them for Savin, those with `ord mod n₀ < d₀`
/// for Kazhdan-Patterson covers. Their images meet every 𝔖_k-orbit of X(λ) once.
pub fn select_representatives(cov: &CoverSpec, ty: &TypeSpec) -> Result<Vec<Vec<i64>>, CoverError> {
    let p = derive_params(cov, ty)?;
    let all = sorted_box(ty.k(), p.n0);
    match cov.kind {
        CoverKind::Savin => Ok(all),
        CoverKind::Kp => Ok(all.into_iter().filter(|t| ord(t).rem_euclid(p.n0) < p.d0).collect()),
        CoverKind::Generic => Err(CoverError::UnsupportedKind("representative selection")),
    }
}

/// For `t1 ∼ t2` modulo T(𝔟,ϱ), whether `t1 − t2 ∈ T₀(𝔟) = n₀ℤ^k`.
///
/// The answer is cross-checked against the criterion `ord t1 ≡ ord t2 (mod n₀)`;
/// disagreement is reported as a lemma violation.
pub fn kp_class_test(cov: &CoverSpec, ty: &TypeSpec, t1: &[i64], t2: &[i64]) -> Result<bool, CoverError> {
    if cov.kind != CoverKind::Kp {
        return Err(CoverError::UnsupportedKind("the ord class test"));
    }
    let p = derive_params(cov, ty)?;
    let diff: Vec<i64> = t1.iter().zip(t2).map(|(a, b)| a - b).collect();
    if !in_t_brho(cov, ty, &diff) {
        return Err(CoverError::NotEquivalent(t1.to_vec(), t2.to_vec()));
    }
    let in_t0 = diff.iter().all(|x| x % p.n0 == 0);
    let by_ord = (ord(t1) - ord(t2)) % p.n0 == 0;
    if in_t0 != by_ord {
        return Err(CoverError::LemmaViolation(format!("{t1:?} vs {t2:?}: T0 test {in_t0}, ord test {by_ord}")));
    }
    Ok(in_t0)
}

/// Smallest `m > 0` with `m (e_i − e_{i+1}) ∈ T(𝔟,ϱ)`, verified equal for every `i`.
pub fn coroot_multiplier(group: &QuotientGroup) -> Result<i64, CoverError> {
    let k = group.rank();
    if k < 2 {
        return Ok(1);
    }
    let root = |i: usize| -> Vec<i64> { (0..k).map(|j| i64::from(j == i) - i64::from(j == i + 1)).collect() };
    let m = group.element_order(&root(0));
    for i in 1..k - 1 {
        let mi = group.element_order(&root(i));
        if mi != m {
            return Err(CoverError::Degenerate(format!("coroot multiples differ: {m} vs {mi}")));
        }
    }
    Ok(m as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kp(n: i64, c: i64) -> CoverSpec {
        CoverSpec::kp(n, c).unwrap()
    }

    fn ty(r: i64, k: i64, l0: i64) -> TypeSpec {
        TypeSpec::new(r, k, l0, 1).unwrap()
    }

    #[test]
    fn derived_parameters() {
        let p = derive_params(&kp(4, 0), &ty(2, 2, 1)).unwrap();
        assert_eq!(p, DerivedParams { r0: 1, n0: 4, d0: 4 });
        for r in [2, 4, 6] {
            let p = derive_params(&CoverSpec::savin(4).unwrap(), &ty(r, 2, 1)).unwrap();
            assert_eq!(p.n0, 2);
        }
        let p = derive_params(&kp(1, 0), &ty(3, 3, 1)).unwrap();
        assert_eq!((p.n0, p.d0), (1, 1));
        let p = derive_params(&kp(4, 0), &ty(3, 3, 1)).unwrap();
        assert_eq!((p.n0, p.d0), (4, 2));
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(TypeSpec::new(3, 2, 1, 1), Err(CoverError::KDoesNotDivideR { .. })));
        assert!(matches!(derive_params(&kp(4, 0), &ty(2, 2, 3)), Err(CoverError::L0DoesNotDivideN { .. })));
        assert!(CoverSpec::new(CoverKind::Kp, 4, 0, 2).is_err());
        assert!(CoverSpec::new(CoverKind::Savin, 4, 0, 2).is_err());
        assert!(CoverSpec::kp(0, 0).is_err());
    }

    #[test]
    fn membership() {
        let (cov, t) = (kp(4, 0), ty(2, 2, 1));
        assert!(in_t_brho(&cov, &t, &[4, 0]));
        assert!(in_t_brho(&cov, &t, &[4, 4]));
        // congruences read 1·(s1+s2) − s_i ≡ 0 (mod 4): for (1, 0) the i = 2 row gives 1.
        assert!(!in_t_brho(&cov, &t, &[1, 0]));
    }

    #[test]
    fn worked_orders() {
        assert_eq!(x_lambda(&kp(4, 0), &ty(2, 2, 1)).unwrap().order(), 16);
        assert_eq!(x_lambda(&kp(4, 0), &ty(3, 3, 1)).unwrap().order(), 32);
        assert_eq!(x_lambda(&CoverSpec::savin(4).unwrap(), &ty(2, 2, 1)).unwrap().order(), 4);
        assert_eq!(x_lambda(&kp(1, 0), &ty(4, 4, 1)).unwrap().order(), 1);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(whittaker_dim_closed(&kp(4, 0), &ty(2, 2, 1)).unwrap(), 10);
        assert_eq!(whittaker_dim_closed(&kp(4, 0), &ty(3, 3, 1)).unwrap(), 10);
        assert_eq!(whittaker_dim_closed(&kp(1, 0), &ty(5, 5, 1)).unwrap(), 1);
        assert_eq!(whittaker_dim_closed(&CoverSpec::savin(4).unwrap(), &ty(2, 2, 1)).unwrap(), 3);
        assert!(matches!(
            whittaker_dim_closed(&CoverSpec::generic(4, 1, 3).unwrap(), &ty(2, 2, 1)),
            Err(CoverError::UnsupportedKind(_))
        ));
    }

    #[test]
    fn kp_lemma_examples() {
        assert!(verify_kp_lemma(&kp(4, 0), &ty(3, 3, 1)).unwrap());
        assert!(verify_kp_lemma(&kp(4, 0), &ty(2, 2, 1)).unwrap());
    }

    #[test]
    fn ord_values() {
        assert_eq!(ord(&[0, 0, 0]), 0);
        assert_eq!(ord(&[1, 2, 3]), 6);
    }

    #[test]
    fn representatives() {
        let savin = select_representatives(&CoverSpec::savin(4).unwrap(), &ty(2, 2, 1)).unwrap();
        assert_eq!(savin, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        let kp_reps = select_representatives(&kp(4, 0), &ty(3, 3, 1)).unwrap();
        assert_eq!(kp_reps.len(), 10);
        assert!(kp_reps.iter().all(|t| ord(t) % 4 < 2));
        assert_eq!(select_representatives(&kp(1, 0), &ty(3, 3, 1)).unwrap(), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn class_test_rejects_inequivalent_pairs() {
        let (cov, t) = (kp(4, 0), ty(3, 3, 1));
        assert!(kp_class_test(&cov, &t, &[1, 2, 3], &[1, 2, 3]).unwrap());
        assert!(!kp_class_test(&cov, &t, &[3, 4, 5], &[1, 2, 3]).unwrap());
        assert!(matches!(kp_class_test(&cov, &t, &[1, 0, 0], &[0, 0, 0]), Err(CoverError::NotEquivalent(..))));
    }

    #[test]
    fn coroot_multiple_is_n0() {
        let g = x_lambda(&kp(4, 0), &ty(3, 3, 1)).unwrap();
        assert_eq!(coroot_multiplier(&g).unwrap(), 4);
        let g = x_lambda(&CoverSpec::savin(6).unwrap(), &ty(3, 3, 1)).unwrap();
        assert_eq!(coroot_multiplier(&g).unwrap(), 3);
    }
}
