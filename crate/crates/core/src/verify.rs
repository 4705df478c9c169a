//! Invariant suites behind `mgg verify`. Each suite returns one [`CheckResult`] per
//! named invariant; a failure carries the first counterexample found.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cocycle::{FieldElem, FieldModel};
use crate::coeff::{IntPoly, RatFunc};
use crate::cover::{self, CoverKind, CoverSpec, TypeSpec, DEFAULT_BOUND};
use crate::hecke_affine::{AffineElement, AffineError, AffineHecke, LatticeSpec};
use crate::hecke_finite::{FiniteHecke, HeckeElement, InducedSignModule};
use crate::report::{dim_report, Params};
use crate::symgroup::{factorial, Composition, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    HeckeFinite,
    Bernstein,
    KpLemma,
    Cocycle,
    Cover,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::HeckeFinite, Suite::Bernstein, Suite::KpLemma, Suite::Cocycle, Suite::Cover];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::HeckeFinite => "hecke-finite",
            Suite::Bernstein => "bernstein",
            Suite::KpLemma => "kp-lemma",
            Suite::Cocycle => "cocycle",
            Suite::Cover => "cover",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub invariant: String,
    pub cases: u64,
    /// First counterexample, if any.
    pub failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {}: {} ({} cases)", self.suite, self.invariant, self.cases),
            Some(e) => write!(f, "FAIL {}: {} ({} cases): {e}", self.suite, self.invariant, self.cases),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Build the finite Hecke algebra with a perturbed structure constant.
    pub inject_fault: bool,
    /// Residue field sizes for the cocycle suite.
    pub field_sizes: Vec<u64>,
    /// Restrict the cocycle suite to one `n`; by default every `n | q − 1`.
    pub field_degree: Option<u64>,
    pub bound: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { seed: 0x5eed, inject_fault: false, field_sizes: vec![5, 7, 13], field_degree: None, bound: DEFAULT_BOUND }
    }
}

/// Accumulates cases for one invariant and keeps the first failure.
struct Check {
    suite: Suite,
    invariant: String,
    cases: u64,
    failure: Option<String>,
}

impl Check {
    fn new(suite: Suite, invariant: impl Into<String>) -> Self {
        Self { suite, invariant: invariant.into(), cases: 0, failure: None }
    }

    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn error(&mut self, e: impl fmt::Display) {
        self.case(false, || e.to_string());
    }

    fn done(self) -> CheckResult {
        CheckResult { suite: self.suite, invariant: self.invariant, cases: self.cases, failure: self.failure }
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Vec<CheckResult> {
    match suite {
        Suite::HeckeFinite => hecke_finite_suite(opts),
        Suite::Bernstein => bernstein_suite(opts),
        Suite::KpLemma => kp_lemma_suite(),
        Suite::Cocycle => cocycle_suite(opts),
        Suite::Cover => cover_suite(opts),
    }
}

pub fn run_all(opts: &VerifyOptions) -> Vec<CheckResult> {
    Suite::ALL.iter().flat_map(|&s| run_suite(s, opts)).collect()
}

fn random_coeff(rng: &mut impl Rng) -> RatFunc {
    let a = rng.gen_range(-2..=2);
    let b = rng.gen_range(-1..=1);
    let c = RatFunc::from_poly(IntPoly::from_i64s(&[a, b]));
    if c.is_zero() {
        RatFunc::one()
    } else {
        c
    }
}

fn random_hecke(k: usize, rng: &mut impl Rng) -> HeckeElement {
    let perms = Permutation::all(k);
    let mut h = HeckeElement::zero(k);
    for _ in 0..rng.gen_range(1..=3) {
        h.add_term(perms.choose(rng).expect("nonempty").clone(), random_coeff(rng));
    }
    h
}

fn hecke_finite_suite(opts: &VerifyOptions) -> Vec<CheckResult> {
    let s = Suite::HeckeFinite;
    let alg = |k: usize, f: usize| {
        if opts.inject_fault {
            FiniteHecke::with_injected_fault(k, f)
        } else {
            FiniteHecke::new(k, f)
        }
    };
    let mut quad = Check::new(s, "quadratic relation (T_s + 1)(T_s - q0) = 0");
    let mut braid = Check::new(s, "braid and commutation relations");
    let mut basis = Check::new(s, "T_w = product along any reduced word; dimension k!");
    let mut assoc = Check::new(s, "associativity on 200 random triples");
    let mut sign = Check::new(s, "sign character is multiplicative");
    for f in 1..=2 {
        for k in 1..=4 {
            let h = alg(k, f);
            let one = HeckeElement::one(k);
            for i in 1..k {
                let ts = HeckeElement::simple(k, i).expect("valid index");
                let l = ts.add(&one).expect("same rank");
                let r = ts.sub(&one.scale(h.q0())).expect("same rank");
                let p = h.multiply(&l, &r).expect("same rank");
                quad.case(p.is_zero(), || format!("k={k} f={f} s_{i}: {p}"));
                for j in i + 1..k {
                    let tj = HeckeElement::simple(k, j).expect("valid index");
                    let (a, b) = if j == i + 1 {
                        let x = h.multiply(&h.multiply(&ts, &tj).unwrap(), &ts).unwrap();
                        let y = h.multiply(&h.multiply(&tj, &ts).unwrap(), &tj).unwrap();
                        (x, y)
                    } else {
                        (h.multiply(&ts, &tj).unwrap(), h.multiply(&tj, &ts).unwrap())
                    };
                    braid.case(a == b, || format!("k={k} f={f} s_{i}, s_{j}: {a} vs {b}"));
                }
            }
            let perms = Permutation::all(k);
            basis.case(perms.len() as u64 == factorial(k), || format!("k={k}: {} permutations", perms.len()));
            for w in &perms {
                let mut acc = HeckeElement::one(k);
                for i in w.reduced_word() {
                    acc = h.mul_simple_right(&acc, i);
                }
                basis.case(acc == HeckeElement::basis(w), || format!("k={k} f={f} w={w}: {acc}"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for n in 0..200 {
        let k = 1 + n % 4;
        let h = alg(k, 1);
        let (a, b, c) = (random_hecke(k, &mut rng), random_hecke(k, &mut rng), random_hecke(k, &mut rng));
        let lhs = h.multiply(&h.multiply(&a, &b).unwrap(), &c).unwrap();
        let rhs = h.multiply(&a, &h.multiply(&b, &c).unwrap()).unwrap();
        assoc.case(lhs == rhs, || format!("k={k}: ({a})({b})({c})"));
        let ab = h.multiply(&a, &b).unwrap();
        let (sa, sb, sab) = (h.sign(&a), h.sign(&b), h.sign(&ab));
        sign.case(sab == &sa * &sb, || format!("k={k}: sign({a}) sign({b}) != sign(product)"));
    }
    let mut induced = Check::new(s, "induced sign module has dimension k!/prod k_i!");
    let mut hom = Check::new(s, "Hom to the sign character is one-dimensional");
    for k in 1..=5 {
        let h = alg(k, 1);
        for comp in Composition::all(k) {
            match InducedSignModule::new(k, comp.clone()) {
                Ok(m) => {
                    let expect = factorial(k) / comp.young_order();
                    induced.case(m.dim() as u64 == expect, || format!("{comp}: dim {} != {expect}", m.dim()));
                    match h.hom_to_sign_dim(&m) {
                        Ok(d) => hom.case(d == 1, || format!("{comp}: dim Hom = {d}")),
                        Err(e) => hom.error(e),
                    }
                }
                Err(e) => induced.error(e),
            }
        }
    }
    vec![quad.done(), braid.done(), basis.done(), assoc.done(), sign.done(), induced.done(), hom.done()]
}

/// Lattices used by the Bernstein suite: Kazhdan-Patterson and Savin, `k ∈ {2, 3}`.
pub fn bernstein_lattices() -> Vec<(CoverSpec, TypeSpec)> {
    let mut out = Vec::new();
    for k in 2..=3 {
        let ty = TypeSpec::new(k, k, 1, 1).expect("valid type");
        for cov in [CoverSpec::kp(4, 0), CoverSpec::kp(3, 1), CoverSpec::kp(6, 0), CoverSpec::savin(4), CoverSpec::savin(6)] {
            out.push((cov.expect("valid cover"), ty));
        }
    }
    out
}

/// Points of the lattice with every coordinate in `[-radius, radius]`, in lexicographic order.
pub fn lattice_window(lattice: &LatticeSpec, radius: i64) -> Vec<Vec<i64>> {
    let k = lattice.rank();
    let mut out = Vec::new();
    let mut t = vec![-radius; k];
    loop {
        if lattice.contains(&t) {
            out.push(t.clone());
        }
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if t[i] < radius {
                t[i] += 1;
                break;
            }
            t[i] = -radius;
        }
    }
}

fn random_affine(alg: &AffineHecke, rng: &mut impl Rng) -> AffineElement {
    let k = alg.rank();
    let perms = Permutation::all(k);
    let basis = alg.lattice().basis().to_vec();
    let mut x = AffineElement::zero(k);
    for _ in 0..rng.gen_range(1..=2) {
        let mut t = vec![0; k];
        for row in &basis {
            let m = rng.gen_range(-1..=1);
            for (a, b) in t.iter_mut().zip(row) {
                *a += m * b;
            }
        }
        x.add_term(t, perms.choose(rng).expect("nonempty").clone(), random_coeff(rng));
    }
    x
}

fn bernstein_suite(opts: &VerifyOptions) -> Vec<CheckResult> {
    let s = Suite::Bernstein;
    let mut identity = Check::new(s, "Bernstein relation times its denominator");
    let mut normal = Check::new(s, "phi_t T_s - T_s phi_(s t) is the lattice correction");
    let mut quad = Check::new(s, "quadratic relation on T_s phi_t");
    let mut braid = Check::new(s, "braid relation on T_w phi_t");
    let mut assoc = Check::new(s, "associativity on 50 random affine triples");
    let mut lemma = Check::new(s, "T_w phi_(-t) expansion: length bound, ord, non-negative coefficients");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let lattices = bernstein_lattices();
    let mut triples = 0;
    for (li, (cov, ty)) in lattices.iter().enumerate() {
        let lattice = match LatticeSpec::for_type(cov, ty) {
            Ok(l) => l,
            Err(e) => {
                identity.error(e);
                continue;
            }
        };
        let k = ty.k();
        let n0 = match cover::derive_params(cov, ty) {
            Ok(p) => p.n0,
            Err(e) => {
                identity.error(e);
                continue;
            }
        };
        let alg = AffineHecke::new(lattice, 1);
        let tag = format!("{:?}(n={}, c={}) k={k}", cov.kind(), cov.n(), cov.c());
        let q0m1 = &alg.finite().q0().clone() - &RatFunc::one();
        let window = lattice_window(alg.lattice(), 2 * n0);
        let res: Result<(), AffineError> = (|| {
            for t in &window {
                for i in 1..k {
                    let x = alg.bernstein_cross(t, i)?;
                    let alpha = alg.lattice().coroot(i);
                    let neg: Vec<i64> = alpha.iter().map(|a| -a).collect();
                    let denom = alg.phi(&vec![0; k])?.sub(&alg.phi(&neg)?);
                    let lhs = alg.multiply(&denom, &x.lattice_part)?;
                    let rhs = alg.phi(t)?.sub(&alg.phi(&x.swapped)?).scale(&q0m1);
                    identity.case(lhs == rhs, || format!("{tag} t={t:?} s_{i}: {lhs} vs {rhs}"));

                    let ts = alg.t_simple(i)?;
                    let diff = alg.multiply(&alg.phi(t)?, &ts)?.sub(&alg.multiply(&ts, &alg.phi(&x.swapped)?)?);
                    normal.case(diff == x.lattice_part, || format!("{tag} t={t:?} s_{i}: {diff}"));

                    // T_s (T_s phi_t) = (q0 - 1) T_s phi_t + q0 phi_t
                    let once = alg.multiply(&ts, &alg.phi(t)?)?;
                    let twice = alg.multiply(&ts, &once)?;
                    let expect = once.scale(&q0m1).add(&alg.phi(t)?.scale(alg.finite().q0()));
                    quad.case(twice == expect, || format!("{tag} t={t:?} s_{i}: {twice} vs {expect}"));
                }
                for i in 1..k.saturating_sub(1) {
                    let a = Permutation::from_word(k, &[i, i + 1, i])?;
                    let mut x = alg.phi(t)?;
                    let mut y = alg.phi(t)?;
                    for j in [i, i + 1, i] {
                        x = alg.multiply(&alg.t_simple(j)?, &x)?;
                    }
                    for j in [i + 1, i, i + 1] {
                        y = alg.multiply(&alg.t_simple(j)?, &y)?;
                    }
                    let z = alg.t_times_phi(&a, t)?;
                    braid.case(x == y && y == z, || format!("{tag} t={t:?} i={i}"));
                }
                if t.windows(2).all(|p| p[0] <= p[1]) {
                    for w in Permutation::all(k) {
                        let r = alg.check_twphi_lemma(&w, t)?;
                        lemma.case(r.is_ok(), || format!("{tag} w={w} t={t:?}: {}", r.violations.join("; ")));
                    }
                }
            }
            // 50 triples spread over the lattices
            let share = 50 / lattices.len() + usize::from(li < 50 % lattices.len());
            for _ in 0..share {
                let (a, b, c) = (random_affine(&alg, &mut rng), random_affine(&alg, &mut rng), random_affine(&alg, &mut rng));
                let lhs = alg.multiply(&alg.multiply(&a, &b)?, &c)?;
                let rhs = alg.multiply(&a, &alg.multiply(&b, &c)?)?;
                assoc.case(lhs == rhs, || format!("{tag}: ({a})({b})({c})"));
                triples += 1;
            }
            Ok(())
        })();
        if let Err(err) = res {
            identity.error(format!("{tag}: {err}"));
        }
    }
    debug_assert_eq!(triples, 50);
    vec![identity.done(), normal.done(), quad.done(), braid.done(), assoc.done(), lemma.done()]
}

/// Every Kazhdan-Patterson point with `n ≤ 10`, `c < n`, `l0 | n`, `k ≤ 4`, `r ∈ {k, …, 4k}`
/// and every Savin point with `n ≤ 10`, `l0 | n`, `k ≤ 4`, `r ∈ {k, 2k}`.
pub fn acceptance_points() -> Vec<Params> {
    let mut out = Vec::new();
    for n in 1..=10 {
        for l0 in (1..=n).filter(|l| n % l == 0) {
            for k in 1..=4 {
                for m in 1..=4 {
                    for c in 0..n {
                        out.push(Params { kind: CoverKind::Kp, n, c, d: 1, r: m * k, k, l0, f: 1 });
                    }
                    if m <= 2 {
                        out.push(Params { kind: CoverKind::Savin, n, c: -1, d: 2, r: m * k, k, l0, f: 1 });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

fn kp_lemma_suite() -> Vec<CheckResult> {
    let s = Suite::KpLemma;
    let mut lemma = Check::new(s, "n0/d0 = gcd(n/l0, 2cr + r - 1) and gcd(n0/d0, k) = 1");
    let mut order = Check::new(s, "|X| = n0^(k-1) d0 (Kazhdan-Patterson), n0^k (Savin)");
    let mut reps = Check::new(s, "selected representatives count the orbits");
    let mut class = Check::new(s, "T0 membership agrees with the ord test");
    for p in acceptance_points() {
        let (cov, ty) = match p.validate() {
            Ok(x) => x,
            Err(e) => {
                lemma.error(format!("{p:?}: {e}"));
                continue;
            }
        };
        if cov.kind() == CoverKind::Kp {
            match cover::verify_kp_lemma(&cov, &ty) {
                Ok(ok) => lemma.case(ok, || format!("{p:?}")),
                Err(e) => lemma.error(format!("{p:?}: {e}")),
            }
        }
        let res: Result<(), cover::CoverError> = (|| {
            let d = cover::derive_params(&cov, &ty)?;
            let g = cover::x_lambda(&cov, &ty)?;
            let k = ty.k() as u32;
            let expect = match cov.kind() {
                CoverKind::Savin => (d.n0 as u64).pow(k),
                _ => (d.n0 as u64).pow(k - 1) * d.d0 as u64,
            };
            order.case(g.order() == expect, || format!("{p:?}: {} != {expect}", g.order()));
            let chosen = cover::select_representatives(&cov, &ty)?;
            let orbits = g.orbits(DEFAULT_BOUND)?;
            let mut seen: Vec<u64> = chosen.iter().map(|t| orbit_id(&g, &orbits, t)).collect();
            seen.sort();
            seen.dedup();
            reps.case(seen.len() == chosen.len() && chosen.len() == orbits.len(), || {
                format!("{p:?}: {} chosen, {} distinct orbits, {} orbits", chosen.len(), seen.len(), orbits.len())
            });
            if cov.kind() == CoverKind::Kp {
                // pairs t, t + y with y running over the relation lattice basis and its sums
                for row in g.relation_lattice() {
                    let base: Vec<i64> = (0..ty.k() as i64).collect();
                    let moved: Vec<i64> = base.iter().zip(row).map(|(a, b)| a + b).collect();
                    match cover::kp_class_test(&cov, &ty, &base, &moved) {
                        Ok(_) => class.case(true, String::new),
                        Err(e) => class.error(format!("{p:?}: {e}")),
                    }
                }
            }
            Ok(())
        })();
        if let Err(e) = res {
            order.error(format!("{p:?}: {e}"));
        }
    }
    vec![lemma.done(), order.done(), reps.done(), class.done()]
}

fn orbit_id(g: &cover::QuotientGroup, orbits: &[cover::OrbitRecord], t: &[i64]) -> u64 {
    let k = g.rank();
    let min = Permutation::all(k).iter().map(|w| g.class_index(&g.project(&w.act(t)))).min().expect("nonempty");
    let rep = g.class_from_index(min);
    orbits.iter().position(|o| o.representative == rep).map_or(u64::MAX, |i| i as u64)
}

fn random_torus(fm: &FieldModel, r: usize, rng: &mut impl Rng) -> Vec<FieldElem> {
    (0..r).map(|_| fm.elem(rng.gen_range(-3..=3), rng.gen_range(0..fm.unit_modulus() as i64))).collect()
}

fn torus_mul(fm: &FieldModel, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    a.iter().zip(b).map(|(x, y)| fm.mul(x, y)).collect()
}

fn cocycle_suite(opts: &VerifyOptions) -> Vec<CheckResult> {
    let s = Suite::Cocycle;
    let mut bimult = Check::new(s, "Hilbert symbol is bimultiplicative");
    let mut anti = Check::new(s, "Hilbert symbol is antisymmetric");
    let mut units = Check::new(s, "Hilbert symbol is trivial on unit pairs");
    let mut nondeg = Check::new(s, "pairing on F^x/F^xn is non-degenerate");
    let mut two = Check::new(s, "2-cocycle identity on 200 random torus triples per (c, d)");
    let mut comm = Check::new(s, "commutator is antisymmetric and depends only on classes mod n-th powers");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for &q in &opts.field_sizes {
        let degrees: Vec<u64> = match opts.field_degree {
            Some(n) => vec![n],
            None => (1..q).filter(|n| (q - 1) % n == 0).collect(),
        };
        for n in degrees {
            let fm = match FieldModel::new(q, n) {
                Ok(fm) => fm,
                Err(e) => {
                    nondeg.error(e);
                    continue;
                }
            };
            let m = fm.unit_modulus() as i64;
            // exhaustive over a window of F^× / 1-units
            let elems: Vec<FieldElem> = (-2..=2).flat_map(|a| (0..m).map(move |x| (a, x))).map(|(a, x)| fm.elem(a, x)).collect();
            for u in &elems {
                for v in &elems {
                    let (uv, vu) = (fm.hilbert(u, v), fm.hilbert(v, u));
                    anti.case((uv * vu).is_one(), || format!("q={q} n={n} {u:?} {v:?}"));
                    if u.is_unit() && v.is_unit() {
                        units.case(uv.is_one(), || format!("q={q} n={n} {u:?} {v:?}"));
                    }
                }
            }
            for _ in 0..200 {
                let t = random_torus(&fm, 3, &mut rng);
                let (u, v, w) = (t[0], t[1], t[2]);
                let ok = fm.hilbert(&fm.mul(&u, &v), &w) == fm.hilbert(&u, &w) * fm.hilbert(&v, &w)
                    && fm.hilbert(&u, &fm.mul(&v, &w)) == fm.hilbert(&u, &v) * fm.hilbert(&u, &w);
                bimult.case(ok, || format!("q={q} n={n} {u:?} {v:?} {w:?}"));
            }
            nondeg.case(fm.is_nondegenerate(), || format!("q={q} n={n}"));
            for (c, d) in [(0, 1), (1, 1), (-1, 2)] {
                for i in 0..200 {
                    let r = 1 + i % 3;
                    let (g1, g2, g3) =
                        (random_torus(&fm, r, &mut rng), random_torus(&fm, r, &mut rng), random_torus(&fm, r, &mut rng));
                    let sig = |a: &[FieldElem], b: &[FieldElem]| fm.sigma_cover_torus(c, d, a, b).expect("equal lengths");
                    let lhs = sig(&g1, &g2) * sig(&torus_mul(&fm, &g1, &g2), &g3);
                    let rhs = sig(&g1, &torus_mul(&fm, &g2, &g3)) * sig(&g2, &g3);
                    two.case(lhs == rhs, || format!("q={q} n={n} c={c} d={d} {g1:?} {g2:?} {g3:?}"));

                    let com = |a: &[FieldElem], b: &[FieldElem]| fm.commutator_torus(c, d, a, b).expect("equal lengths");
                    let nth: Vec<FieldElem> =
                        random_torus(&fm, r, &mut rng).iter().map(|x| fm.pow(x, n as i64)).collect();
                    let ok = (com(&g1, &g2) * com(&g2, &g1)).is_one()
                        && com(&torus_mul(&fm, &g1, &nth), &g2) == com(&g1, &g2)
                        && com(&g1, &torus_mul(&fm, &g2, &nth)) == com(&g1, &g2);
                    comm.case(ok, || format!("q={q} n={n} c={c} d={d} {g1:?} {g2:?}"));
                }
            }
        }
    }
    vec![bimult.done(), anti.done(), units.done(), nondeg.done(), two.done(), comm.done()]
}

fn cover_suite(opts: &VerifyOptions) -> Vec<CheckResult> {
    let s = Suite::Cover;
    let mut agree = Check::new(s, "closed form = orbit count = Burnside count = Hecke dimension");
    let mut free = Check::new(s, "sum over orbits of [S_k : W_O] = |X|");
    let mut young = Check::new(s, "orbit stabilizers are standard Young subgroups");
    let mut one = Check::new(s, "n = 1 gives dimension 1 for k <= 6");
    let mut golden = Check::new(s, "worked instances");
    for p in acceptance_points() {
        match dim_report(p, opts.bound, None) {
            Ok(r) => agree.case(r.agree == Some(true) && r.dim_hecke.is_some(), || format!("{p:?}: {r:?}")),
            Err(e) => agree.error(format!("{p:?}: {e}")),
        }
        let res: Result<(), cover::CoverError> = (|| {
            let (cov, ty) = p.validate()?;
            let g = cover::x_lambda(&cov, &ty)?;
            let orbits = g.orbits(opts.bound)?;
            let total: u64 = orbits.iter().map(|o| factorial(ty.k()) / o.stabilizer_order).sum();
            free.case(total == g.order(), || format!("{p:?}: {total} != {}", g.order()));
            young.case(orbits.iter().all(|o| o.stabilizer.is_some()), || format!("{p:?}"));
            Ok(())
        })();
        if let Err(e) = res {
            free.error(format!("{p:?}: {e}"));
        }
    }
    for k in 1..=6 {
        for (kind, c, d) in [(CoverKind::Kp, 0, 1), (CoverKind::Savin, -1, 2)] {
            let p = Params { kind, n: 1, c, d, r: k, k, l0: 1, f: 1 };
            match dim_report(p, opts.bound, None) {
                Ok(r) => one.case(
                    r.agree == Some(true) && r.dim_hecke == Some(1) && r.dim_closed == Some(1),
                    || format!("{p:?}: {r:?}"),
                ),
                Err(e) => one.error(format!("{p:?}: {e}")),
            }
        }
    }
    for (p, n0, d0, order, dim) in golden_instances() {
        match dim_report(p, opts.bound, None) {
            Ok(r) => golden.case(
                r.n0 == Some(n0)
                    && r.d0 == Some(d0)
                    && r.x_order == Some(order)
                    && r.agree == Some(true)
                    && r.dim_hecke == Some(dim),
                || format!("{p:?}: {r:?}"),
            ),
            Err(e) => golden.error(format!("{p:?}: {e}")),
        }
    }
    vec![agree.done(), free.done(), young.done(), one.done(), golden.done()]
}

/// `(params, n0, d0, |X|, dimension)` for the worked instances.
pub fn golden_instances() -> Vec<(Params, i64, i64, u64, u64)> {
    vec![
        (Params { kind: CoverKind::Kp, n: 4, c: 0, d: 1, r: 2, k: 2, l0: 1, f: 1 }, 4, 4, 16, 10),
        (Params { kind: CoverKind::Kp, n: 4, c: 0, d: 1, r: 3, k: 3, l0: 1, f: 1 }, 4, 2, 32, 10),
        (Params { kind: CoverKind::Savin, n: 4, c: -1, d: 2, r: 2, k: 2, l0: 1, f: 1 }, 2, 2, 4, 3),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn window_enumerates_lattice_points() {
        let lat = LatticeSpec::for_type(&CoverSpec::savin(4).unwrap(), &TypeSpec::new(2, 2, 1, 1).unwrap()).unwrap();
        let w = lattice_window(&lat, 2);
        assert_eq!(w.len(), 9);
        assert_eq!(w[0], vec![-2, -2]);
    }

    #[test]
    fn injected_fault_is_named() {
        let opts = VerifyOptions { inject_fault: true, ..VerifyOptions::default() };
        let res = run_suite(Suite::HeckeFinite, &opts);
        let failed: Vec<&str> = res.iter().filter(|r| !r.passed()).map(|r| r.invariant.as_str()).collect();
        assert!(failed.iter().any(|name| name.starts_with("quadratic relation")), "{failed:?}");
    }
}
