mod common;

use common::{element_strategy, pair_strategy, rational_strategy};
use proptest::prelude::*;
use thompson_core::analysis::{fixes, is_in_commutator, PlMap};
use thompson_core::jones::graph::{DiagramGraph, Vertex};
use thompson_core::jones::{fingerprint, link_of};
use thompson_core::stabilizer::{stab_half_join, unknot_stabilizer};
use thompson_core::{BinaryTree, Element, Point, Rational, TreePair, WrapCode};

const CAP: usize = 64;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trees_round_trip(p in pair_strategy(12)) {
        let t = p.plus();
        prop_assert_eq!(&t.to_string().parse::<BinaryTree>().unwrap(), t);
        prop_assert_eq!(&p.to_string().parse::<TreePair>().unwrap(), &p);
        prop_assert_eq!(t.internal_count() + 1, t.leaf_count());
    }

    #[test]
    fn leaf_intervals_tile(p in pair_strategy(12)) {
        let mut at = Rational::from_integer(0.into());
        for w in p.plus().leaf_words() {
            let (lo, hi) = w.interval();
            prop_assert_eq!(&lo, &at);
            at = hi;
        }
        prop_assert_eq!(at, Rational::from_integer(1.into()));
    }

    #[test]
    fn reduction_is_confluent(p in pair_strategy(10), order in prop::collection::vec(any::<usize>(), 0..20)) {
        let want = p.reduce();
        prop_assert!(want.is_reduced());
        prop_assert_eq!(want.reduce(), want.clone());
        // remove carets in a scrambled order
        let mut q = p.clone();
        let mut i = 0;
        loop {
            let idx = q.reducible_indices();
            if idx.is_empty() { break; }
            let pick = order.get(i).copied().unwrap_or(0) % idx.len();
            q = q.reduce_at(idx[pick]).unwrap();
            i += 1;
        }
        prop_assert_eq!(q, want);
    }

    #[test]
    fn insertion_then_reduction(g in element_strategy(8), i in any::<usize>()) {
        let p = g.pair();
        let inserted = p.insert_caret(i % p.leaf_count()).unwrap();
        prop_assert_eq!(inserted.leaf_count(), p.leaf_count() + 1);
        prop_assert_eq!(&inserted.reduce(), p);
    }

    #[test]
    fn group_laws(a in element_strategy(6), b in element_strategy(6), c in element_strategy(6)) {
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
        prop_assert!(a.multiply(&a.inverse()).is_identity());
        prop_assert_eq!(Element::identity().multiply(&a), a.clone());
        prop_assert_eq!(a.multiply(&b).flip(), a.flip().multiply(&b.flip()));
    }

    #[test]
    fn pl_map_is_a_homomorphism(a in element_strategy(6), b in element_strategy(6), x in rational_strategy()) {
        let (ma, mb) = (PlMap::from_element(&a), PlMap::from_element(&b));
        let ab = PlMap::from_element(&a.multiply(&b));
        prop_assert_eq!(ab.evaluate(&x), mb.evaluate(&ma.evaluate(&x)));
        prop_assert_eq!(&ma.then(&mb), &ab);
        prop_assert_eq!(ab.to_element(), a.multiply(&b));
        let one = Rational::from_integer(1.into());
        let flipped = PlMap::from_element(&a.flip()).evaluate(&x);
        prop_assert_eq!(flipped, &one - ma.evaluate(&(&one - &x)));
        prop_assert_eq!(PlMap::from_element(&a.inverse()).evaluate(&ma.evaluate(&x)), x);
    }

    #[test]
    fn pl_maps_have_power_of_two_slopes(a in element_strategy(10)) {
        for s in PlMap::from_element(&a).slopes() {
            prop_assert!(thompson_core::analysis::log2_power(&s).is_some());
        }
    }

    #[test]
    fn graph_degrees(p in pair_strategy(10)) {
        let g = DiagramGraph::build(&p);
        let n = p.leaf_count();
        if n >= 2 {
            prop_assert_eq!(g.edges.len(), 5 * n - 4);
            for v in g.vertices() {
                let want = if matches!(v, Vertex::Leaf(_)) { 2 } else { 4 };
                prop_assert_eq!(g.degree(v), want);
            }
        }
        prop_assert_eq!(link_of(&Element::from_pair(p.clone()), false).crossing_count(), 2 * (Element::from_pair(p).leaf_count() - 1));
    }

    #[test]
    fn mirror_flag(g in element_strategy(6)) {
        let a = fingerprint(&g, CAP).unwrap();
        let b = thompson_core::InvariantFingerprint::of(&link_of(&g, true), CAP).unwrap();
        prop_assert_eq!(a.components, b.components);
        prop_assert_eq!(&a.determinant, &b.determinant);
        prop_assert_eq!(&a.colorings, &b.colorings);
        prop_assert_eq!(a.kauffman_f.invert_variable(), b.kauffman_f);
    }

    #[test]
    fn fingerprint_bounds(g in element_strategy(7)) {
        let f = fingerprint(&g, CAP).unwrap();
        for (p, n) in &f.colorings {
            let mut m = n.clone();
            let mut k = 0;
            while &m % p == 0u32.into() && m > 1u32.into() {
                m /= *p;
                k += 1;
            }
            prop_assert_eq!(m, 1u32.into(), "not a power of {}", p);
            // constant colorings always exist; mod 2 a coloring is constant per component
            prop_assert!(k >= 1);
            if *p == 2 {
                prop_assert_eq!(k, f.components);
            }
        }
    }

    #[test]
    fn wrapping_keeps_the_affine_copy(g in element_strategy(6), x in rational_strategy()) {
        for code in WrapCode::ALL {
            let h = g.wrap(code);
            prop_assert!(!h.is_identity());
            // 0.w x as a rational
            let (lo, hi) = code.word().interval();
            let y = &lo + (&hi - &lo) * &x;
            prop_assert_eq!(fixes(&h, &y), fixes(&g, &x));
        }
    }

    #[test]
    fn half_joins_fix_one_half(a in element_strategy(5), b in element_strategy(5)) {
        let j = stab_half_join(&a, &b);
        prop_assert!(fixes(&j, &Rational::new(1.into(), 2.into())));
    }

    #[test]
    fn stabilizers_fix_their_point(x in rational_strategy()) {
        let half = Rational::new(1.into(), 2.into());
        let zero = Rational::from_integer(0.into());
        let one = Rational::from_integer(1.into());
        prop_assume!(x != half && x != zero && x != one);
        let f = unknot_stabilizer(&Point::Exact(x.clone())).unwrap();
        prop_assert!(fixes(&f, &x));
        prop_assert!(!f.is_identity());
        prop_assert!(fingerprint(&f, usize::MAX).unwrap().is_unknot());
    }

    #[test]
    fn commutators_are_in_the_commutator_subgroup(a in element_strategy(5), b in element_strategy(5)) {
        let c = a.multiply(&b).multiply(&a.inverse()).multiply(&b.inverse());
        prop_assert!(is_in_commutator(&c));
    }
}
