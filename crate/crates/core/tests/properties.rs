use askzeta_core::bivratfun::TPoly;
use askzeta_core::incidence::{cotree, disjoint_union, join};
use askzeta_core::linmat::{build_a_graph, build_c_graph, minor, symbolic_rank, LinearFormMatrix, Sign};
use askzeta_core::mappings::{formula_rank_graph, rank_from_animations};
use askzeta_core::oracle::{ask_average, image_size, kernel_size, smith_valuations};
use askzeta_core::zetacalc::{join_wminus, master_w_h, wminus, wsharp, wsharp_disjoint, wsharp_join, wsharp_via_master};
use askzeta_core::{BivariateRational, Graph, Hypergraph, LaurentPoly};
use num_bigint::{BigInt, BigUint};
use num_traits::Pow;
use proptest::prelude::*;

fn graph_strategy(max_n: usize, loops: bool) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).filter(|&(i, j)| loops || i != j).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
            Graph::new(n, pairs.iter().zip(bits).filter(|(_, b)| *b).map(|(&e, _)| e)).unwrap()
        })
    })
}

fn hypergraph_strategy(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (0..=max_n, 0..=max_m).prop_flat_map(|(n, m)| {
        proptest::collection::vec(0u32..1 << n, m).prop_map(move |masks| {
            Hypergraph::new(n, masks.iter().map(|&s| (0..n).filter(|v| s >> v & 1 == 1).collect()).collect()).unwrap()
        })
    })
}

fn int_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<BigInt>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec((-12i64..=12).prop_map(BigInt::from), c), r)
    })
}

fn factor_strategy() -> impl Strategy<Value = BivariateRational> {
    (proptest::collection::vec((-2i64..=2, -2i64..=2, 0usize..3), 1..4), proptest::collection::vec(-2i64..=2, 0..3))
        .prop_map(|(terms, poles)| {
            let mut num = TPoly::one();
            for (c, x, t) in terms {
                num = &num + &TPoly::monomial(c, x, t);
            }
            BivariateRational::new(num, poles)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn wsharp_routes_agree(g in graph_strategy(5, false)) {
        prop_assert_eq!(wsharp(&g).unwrap().value, wsharp_via_master(&g).unwrap().value);
    }

    #[test]
    fn wsharp_join_and_union(a in graph_strategy(3, false), b in graph_strategy(3, false)) {
        let (wa, wb) = (wsharp(&a).unwrap(), wsharp(&b).unwrap());
        let j = wsharp_join(&wa, a.vertex_count(), &wb, b.vertex_count()).unwrap();
        prop_assert_eq!(&j.value, &wsharp(&join(&a, &b)).unwrap().value);
        let u = wsharp_disjoint(&wa, &wb);
        prop_assert_eq!(&u.value, &wsharp(&disjoint_union(&a, &b)).unwrap().value);
    }

    #[test]
    fn join_formula_matches_model(a in graph_strategy(3, false), b in graph_strategy(3, false)) {
        prop_assume!(cotree(&a).is_ok() && cotree(&b).is_ok());
        let j = join_wminus(&wminus(&a).unwrap(), a.vertex_count(), &wminus(&b).unwrap(), b.vertex_count()).unwrap();
        prop_assert_eq!(j.value, wminus(&join(&a, &b)).unwrap().value);
    }

    #[test]
    fn master_is_invariant_under_relabelling(h in hypergraph_strategy(4, 4), seed in any::<u64>()) {
        let n = h.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let order: Vec<usize> = (0..h.hyperedge_count()).rev().collect();
        let moved = h.relabel_vertices(&perm).permute_hyperedges(&order);
        prop_assert_eq!(master_w_h(&h).unwrap().value, master_w_h(&moved).unwrap().value);
    }

    #[test]
    fn master_starts_with_one(h in hypergraph_strategy(4, 4)) {
        prop_assert!(master_w_h(&h).unwrap().value.coefficient(0).is_one());
    }

    #[test]
    fn hadamard_is_termwise(a in factor_strategy(), b in factor_strategy()) {
        let h = a.hadamard_t(&b);
        let (sa, sb, sh) = (a.series_prefix(8), b.series_prefix(8), h.series_prefix(8));
        for i in 0..=8 {
            prop_assert_eq!(&sh[i], &(&sa[i] * &sb[i]));
        }
    }

    #[test]
    fn arithmetic_matches_series(a in factor_strategy(), b in factor_strategy()) {
        let sum = &a + &b;
        let prod = &a * &b;
        let (sa, sb) = (a.series_prefix(6), b.series_prefix(6));
        let (ss, sp) = (sum.series_prefix(6), prod.series_prefix(6));
        for i in 0..=6 {
            prop_assert_eq!(&ss[i], &(&sa[i] + &sb[i]));
            let mut conv = LaurentPoly::zero();
            for j in 0..=i {
                conv = &conv + &(&sa[j] * &sb[i - j]);
            }
            prop_assert_eq!(&sp[i], &conv);
        }
    }

    #[test]
    fn kernel_times_image(m in int_matrix(4), p in prop::sample::select(vec![2u64, 3, 5]), k in 1u32..4) {
        let ker = kernel_size(&m, p, k).unwrap();
        let img = image_size(&m, p, k).unwrap();
        prop_assert_eq!(ker * img, BigUint::from(p).pow(k * m.len() as u32));
    }

    #[test]
    fn kernel_from_smith_valuations(m in int_matrix(4), p in prop::sample::select(vec![2u64, 3, 5]), k in 1u32..4) {
        let prof = smith_valuations(&m, p);
        let e = k * (m.len() - prof.rank) as u32 + prof.valuations.iter().map(|&l| l.min(k)).sum::<u32>();
        prop_assert_eq!(kernel_size(&m, p, k).unwrap(), BigUint::from(p).pow(e));
    }

    #[test]
    fn rank_matches_animation_count(g in graph_strategy(5, true), plus in any::<bool>()) {
        let sign = if plus { Sign::Plus } else { Sign::Minus };
        let r = symbolic_rank(&build_c_graph(&g, sign)).unwrap();
        prop_assert_eq!(r, rank_from_animations(&g, plus));
        prop_assert_eq!(r, formula_rank_graph(&g, plus));
    }
}

fn permuted(m: &LinearFormMatrix, rows: &[usize], cols: &[usize]) -> LinearFormMatrix {
    let mut out = LinearFormMatrix::zero(m.rows(), m.cols(), m.var_count());
    for (i, &r) in rows.iter().enumerate() {
        for (j, &c) in cols.iter().enumerate() {
            out.set(i, j, m.get(r, c));
        }
    }
    out
}

#[test]
fn ask_average_ignores_row_and_column_order() {
    let a = build_a_graph(&Graph::path(3), Sign::Minus);
    let b = permuted(&a, &[2, 0, 1], &[1, 2, 0]);
    for (p, k) in [(2, 1), (3, 1), (2, 2)] {
        assert_eq!(ask_average(&a, p, k).unwrap(), ask_average(&b, p, k).unwrap());
    }
}

#[test]
fn minors_factor_over_disjoint_unions() {
    let g = disjoint_union(&Graph::cycle(3), &Graph::path(2));
    let c = build_c_graph(&g, Sign::Plus);
    let whole = minor(&c, &[0, 1, 2, 3], &[0, 1, 2, 3]).unwrap();
    let left = minor(&c, &[0, 1, 2], &[0, 1, 2]).unwrap();
    let right = minor(&c, &[3], &[3]).unwrap();
    let (lc, lm) = left.as_term().unwrap();
    let (rc, rm) = right.as_term().unwrap();
    let (wc, wm) = whole.as_term().unwrap();
    assert_eq!(wc, &(lc * rc));
    assert_eq!(wm, &lm.mul(rm));
}
