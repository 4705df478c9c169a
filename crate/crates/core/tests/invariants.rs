use metaplectic_gg::cocycle::{FieldElem, FieldModel};
use metaplectic_gg::coeff::{IntPoly, RatFunc};
use metaplectic_gg::cover::QuotientGroup;
use metaplectic_gg::hecke_finite::{FiniteHecke, HeckeElement};
use metaplectic_gg::symgroup::Permutation;
use num_rational::BigRational;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| IntPoly::from_i64s(&c))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly()).prop_map(|(n, d)| if d.is_zero() { RatFunc::from_poly(n) } else { RatFunc::new(n, d).unwrap() })
}

fn perm(k: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=k).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|line| Permutation::from_one_line(&line).unwrap())
}

fn hecke(k: usize) -> impl Strategy<Value = HeckeElement> {
    prop::collection::vec((perm(k), -2i64..=2, -1i64..=1), 1..3).prop_map(move |terms| {
        let mut h = HeckeElement::zero(k);
        for (w, a, b) in terms {
            h.add_term(w, RatFunc::from_poly(IntPoly::from_i64s(&[a, b])));
        }
        h
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn ratfunc_is_canonical(a in ratfunc(), b in ratfunc()) {
        // equal values have identical representations
        let x = &(&a * &b) + &a;
        let y = &a * &(&b + &RatFunc::one());
        prop_assert_eq!(x.numerator(), y.numerator());
        prop_assert_eq!(x.denominator(), y.denominator());
    }

    #[test]
    fn evaluation_is_a_ring_map(a in ratfunc(), b in ratfunc(), q in 2i64..9) {
        let q = BigRational::from_integer(q.into());
        if let (Ok(x), Ok(y)) = (a.eval(&q), b.eval(&q)) {
            prop_assert_eq!((&a * &b).eval(&q).unwrap(), &x * &y);
            prop_assert_eq!((&a + &b).eval(&q).unwrap(), x + y);
        }
    }

    #[test]
    fn action_composes(w in perm(4), v in perm(4), t in prop::collection::vec(-9i64..9, 4)) {
        prop_assert_eq!(w.compose(&v).act(&t), w.act(&v.act(&t)));
        prop_assert_eq!(w.inverse().act(&w.act(&t)), t);
    }

    #[test]
    fn length_of_product_is_subadditive(w in perm(5), v in perm(5)) {
        let wv = w.compose(&v);
        prop_assert!(wv.length() <= w.length() + v.length());
        prop_assert_eq!(wv.length() % 2, (w.length() + v.length()) % 2);
        prop_assert_eq!(Permutation::from_word(5, &w.reduced_word()).unwrap(), w.clone());
        prop_assert_eq!(w.reduced_word().len(), w.length());
    }

    #[test]
    fn hecke_associativity(a in hecke(3), b in hecke(3), c in hecke(3), f in 1usize..=2) {
        let h = FiniteHecke::new(3, f);
        let lhs = h.multiply(&h.multiply(&a, &b).unwrap(), &c).unwrap();
        let rhs = h.multiply(&a, &h.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sign_is_multiplicative(a in hecke(4), b in hecke(4)) {
        let h = FiniteHecke::new(4, 1);
        let ab = h.multiply(&a, &b).unwrap();
        prop_assert_eq!(h.sign(&ab), &h.sign(&a) * &h.sign(&b));
    }

    #[test]
    fn projection_respects_addition(x in prop::collection::vec(-20i64..20, 3), y in prop::collection::vec(-20i64..20, 3)) {
        let g = QuotientGroup::from_generators(3, &[vec![2, 2, 2], vec![4, 0, 0], vec![0, 4, 0], vec![0, 0, 4]]).unwrap();
        let sum: Vec<i64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
        let (px, py) = (g.project(&x), g.project(&y));
        let psum: Vec<i64> = px.iter().zip(&py).map(|(a, b)| a + b).collect();
        prop_assert_eq!(g.project(&sum), g.project(&psum));
        prop_assert_eq!(g.project(&px), px);
    }

    #[test]
    fn cover_cocycle_identity(
        (q, n) in prop::sample::select(vec![(5u64, 4u64), (7, 3), (7, 6), (13, 4), (13, 12)]),
        cd in prop::sample::select(vec![(0i64, 1i64), (1, 1), (-1, 2)]),
        raw in prop::collection::vec((-3i64..=3, 0i64..12), 9),
    ) {
        let fm = FieldModel::new(q, n).unwrap();
        let e: Vec<FieldElem> = raw.iter().map(|&(a, x)| fm.elem(a, x)).collect();
        let (g1, g2, g3) = (&e[0..3], &e[3..6], &e[6..9]);
        let mul = |a: &[FieldElem], b: &[FieldElem]| -> Vec<FieldElem> { a.iter().zip(b).map(|(x, y)| fm.mul(x, y)).collect() };
        let sig = |a: &[FieldElem], b: &[FieldElem]| fm.sigma_cover_torus(cd.0, cd.1, a, b).unwrap();
        prop_assert_eq!(sig(g1, g2) * sig(&mul(g1, g2), g3), sig(g1, &mul(g2, g3)) * sig(g2, g3));
        prop_assert!((fm.commutator_torus(cd.0, cd.1, g1, g2).unwrap() * fm.commutator_torus(cd.0, cd.1, g2, g1).unwrap()).is_one());
    }
}
