mod common;

use artin_core::decompose::check_link_structure;
use artin_core::oracle::Certificate;
use artin_core::{
    alternating_word, classify, decompose, find_forbidden, garside_nf, hn_coset, member_rational, member_submonoid,
    ArtinGraph, CleanContext, GroupContext, Letter, MembershipResult, RaagContext, RationalExpr, VertexSet, Word,
};
use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn letter() -> impl Strategy<Value = Letter> {
    (prop::sample::select(vec!["a", "b", "c"]), any::<bool>())
        .prop_map(|(n, inverse)| Letter { name: n.to_string(), inverse })
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(letter(), 0..=max).prop_map(Word::from_letters)
}

fn ab_word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((any::<bool>(), any::<bool>()), 0..=max).prop_map(|v| {
        v.into_iter().map(|(b, inverse)| Letter { name: if b { "b" } else { "a" }.into(), inverse }).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn free_reduce_is_idempotent_and_shortening(x in word(20)) {
        let r = x.free_reduce();
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert!(r.len() <= x.len());
        prop_assert_eq!(x.exponent_sum("a"), r.exponent_sum("a"));
    }

    #[test]
    fn alternating_word_letter_counts(m in 0usize..40) {
        let x = alternating_word("u", "v", m).unwrap();
        let count = |n: &str| x.letters().iter().filter(|l| l.name == n).count();
        prop_assert_eq!(count("u"), m.div_ceil(2));
        prop_assert_eq!(count("v"), m / 2);
    }

    #[test]
    fn word_display_round_trips(x in word(15)) {
        prop_assert_eq!(Word::parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn hn_coset_is_additive(n in 1u32..6, u in ab_word(12), v in ab_word(12)) {
        let sum = (hn_coset(n, &u).unwrap() + hn_coset(n, &v).unwrap()) % n;
        prop_assert_eq!(hn_coset(n, &u.concat(&v)).unwrap(), sum);
    }

    #[test]
    fn garside_nf_round_trips_through_its_word(m in 2u32..7, x in ab_word(14)) {
        let nf = garside_nf(m, &x).unwrap();
        let gens = ["a".to_string(), "b".to_string()];
        prop_assert!(nf.is_left_weighted());
        prop_assert_eq!(garside_nf(m, &nf.to_word(&gens)).unwrap(), nf);
    }
}

/// Free reduction with a random cancellation order must agree with the
/// stack-based reduction.
#[test]
fn free_reduce_is_confluent() {
    let mut r = rng(11);
    let gens: Vec<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
    for _ in 0..1000 {
        let x = random_word(&mut r, &gens, 20);
        let mut letters = x.letters().to_vec();
        loop {
            let spots: Vec<usize> =
                (0..letters.len().saturating_sub(1)).filter(|&i| letters[i].cancels(&letters[i + 1])).collect();
            let Some(&i) = spots.choose(&mut r) else { break };
            letters.drain(i..i + 2);
        }
        assert_eq!(Word::from_letters(letters), x.free_reduce(), "{x}");
    }
}

#[test]
fn graph_round_trip_and_induced_subgraphs() {
    let mut r = rng(12);
    for _ in 0..300 {
        let g = random_graph(&mut r, 7, 0.5);
        let text = g.to_text();
        let back = ArtinGraph::parse(&text).unwrap();
        assert_eq!(back.to_text(), text);
        let json = serde_json::to_string(&g).unwrap();
        let back: ArtinGraph = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_text(), text);
        assert_eq!(g.induced_subgraph(&VertexSet::all(&g)).unwrap().to_text(), text);

        let names = g.vertex_names().to_vec();
        let t: Vec<String> = names.iter().filter(|_| r.gen_bool(0.7)).cloned().collect();
        let s: Vec<String> = t.iter().filter(|_| r.gen_bool(0.6)).cloned().collect();
        let gt = g.induced_subgraph(&VertexSet::new(t.clone())).unwrap();
        let via_t = gt.induced_subgraph(&VertexSet::new(s.clone())).unwrap();
        let direct = g.induced_subgraph(&VertexSet::new(s)).unwrap();
        assert_eq!(via_t.to_text(), direct.to_text());
    }
}

/// A pattern in an induced subgraph is a pattern in the graph, and adding
/// a disjoint clean component never changes the verdict.
#[test]
fn verdict_monotonicity() {
    let mut r = rng(13);
    for _ in 0..500 {
        let g = random_graph(&mut r, 6, 0.5);
        let names = g.vertex_names().to_vec();
        let sub: Vec<String> = names.iter().filter(|_| r.gen_bool(0.7)).cloned().collect();
        let h = g.induced_subgraph(&VertexSet::new(sub)).unwrap();
        if find_forbidden(&h).is_some() {
            assert!(find_forbidden(&g).is_some(), "{g}");
        }

        let mut bigger = g.clone();
        bigger.add_vertex("z0").unwrap();
        bigger.add_vertex("z1").unwrap();
        bigger.add_vertex("z2").unwrap();
        bigger.add_edge("z0", "z1", 5).unwrap();
        bigger.add_edge("z0", "z2", 2).unwrap();
        bigger.add_edge("z1", "z2", 2).unwrap();
        assert_eq!(classify(&bigger).unwrap().is_decidable(), classify(&g).unwrap().is_decidable());
    }
}

#[test]
fn clean_graphs_satisfy_the_link_condition() {
    let mut r = rng(14);
    let mut checked = 0;
    while checked < 500 {
        let g = random_graph(&mut r, 7, 0.8);
        if find_forbidden(&g).is_some() {
            continue;
        }
        for comp in g.components() {
            check_link_structure(&g.induced(&comp)).unwrap();
        }
        let t = decompose(&g).unwrap();
        t.verify(&g).unwrap();
        checked += 1;
    }
}

#[test]
fn hn_coset_is_invariant_under_relations() {
    let mut r = rng(15);
    let ab: Vec<String> = vec!["a".into(), "b".into()];
    for n in 1..=4u32 {
        let g = dihedral(2 * n);
        for _ in 0..200 {
            let x = random_word(&mut r, &ab, 12);
            let y = insert_relator(&mut r, &x, &g);
            let y = insert_free(&mut r, &y, &ab);
            assert_eq!(hn_coset(n, &x).unwrap(), hn_coset(n, &y).unwrap());
        }
    }
}

#[test]
fn brute_force_oracle_separates_wrong_normal_forms() {
    // The m = 3 closure must disagree with the m = 4 and m = 2 normal forms.
    let mut oracle = RewritingOracle::new(&["a", "b"], &[w("aba").concat(&w("bab").inverse())], 8);
    let words = oracle.words_up_to(6);
    let classes: Vec<usize> = words.iter().map(|x| oracle.class(x)).collect();
    for m in [2, 4] {
        let forms: Vec<_> = words.iter().map(|x| garside_nf(m, x).unwrap()).collect();
        assert!(partition_mismatch(&classes, &forms).is_some(), "m = {m}");
    }
}

fn raag_graphs() -> Vec<(String, ArtinGraph)> {
    let mut r = rng(16);
    let mut out = vec![("P4".to_string(), p4()), ("C4".to_string(), c4()), ("St_3".to_string(), star(3))];
    for i in 0..3 {
        let mut g = random_graph(&mut r, 6, 1.0);
        while g.vertex_count() < 4 || g.edge_count() == 0 {
            g = random_graph(&mut r, 6, 1.0);
        }
        out.push((format!("random {i}"), g));
    }
    out
}

#[test]
fn raag_reduce_invariants() {
    let mut r = rng(17);
    for (name, g) in raag_graphs() {
        let ctx = RaagContext::new(g.clone()).unwrap();
        let gens = g.vertex_names().to_vec();
        for _ in 0..500 {
            let x = random_word(&mut r, &gens, 10);
            let red = ctx.reduce(&x).unwrap();
            assert_eq!(ctx.reduce(&red).unwrap(), red, "{name}: {x}");
            assert!(red.len() <= x.len());
            let y = insert_relator(&mut r, &x, &g);
            let y = insert_free(&mut r, &y, &gens);
            assert_eq!(ctx.reduce(&y).unwrap(), red, "{name}: {x} vs {y}");
            assert!(ctx.reduce(&x.concat(&x.inverse())).unwrap().is_empty());
        }
    }
}

#[test]
fn raag_reduce_matches_brute_force_on_c4() {
    let g = c4();
    let relators: Vec<Word> = g
        .edges()
        .map(|(i, j, _)| Word::commutator(&Word::power_of(g.name(i), 1), &Word::power_of(g.name(j), 1)))
        .collect();
    let mut oracle = RewritingOracle::new(&["a", "b", "c", "d"], &relators, 5);
    let ctx = RaagContext::new(g).unwrap();
    let words = oracle.words_up_to(3);
    let classes: Vec<usize> = words.iter().map(|x| oracle.class(x)).collect();
    let forms: Vec<Word> = words.iter().map(|x| ctx.reduce(x).unwrap()).collect();
    assert_eq!(partition_mismatch(&classes, &forms), None);
}

#[test]
fn retraction_is_a_homomorphism() {
    let mut r = rng(18);
    let g = c4();
    let ctx = RaagContext::new(g.clone()).unwrap();
    let gens = g.vertex_names().to_vec();
    let s = VertexSet::new(["a", "b"]);
    for _ in 0..300 {
        let x = random_word(&mut r, &gens, 10);
        let y = random_word(&mut r, &gens, 10);
        let sub = RaagContext::new(g.induced_subgraph(&s).unwrap()).unwrap();
        let lhs = ctx.retraction(&s, &x.concat(&y)).unwrap();
        let rhs = sub.reduce(&ctx.retraction(&s, &x).unwrap().concat(&ctx.retraction(&s, &y).unwrap())).unwrap();
        assert_eq!(lhs, rhs);
        let y = insert_relator(&mut r, &x, &g);
        assert_eq!(ctx.retraction(&s, &x).unwrap(), ctx.retraction(&s, &y).unwrap());
    }
}

fn clean_graphs() -> Vec<(String, ArtinGraph)> {
    let mut r = rng(19);
    let mut out = vec![
        ("P_3^{2,2}".to_string(), path3(2, 2)),
        ("St_3".to_string(), star(3)),
        ("Δ_{2,2,5}".to_string(), triangle(2, 5, 2)),
        ("δ_3".to_string(), dihedral(3)),
    ];
    while out.len() < 10 {
        let g = random_graph(&mut r, 6, 0.6);
        if g.edge_count() > 0 && find_forbidden(&g).is_none() {
            out.push((format!("random {}", out.len()), g));
        }
    }
    out
}

#[test]
fn elementary_equality_is_an_equivalence_respecting_relations() {
    let mut r = rng(20);
    for (name, g) in clean_graphs() {
        let ctx = CleanContext::new(g.clone()).unwrap();
        let gens = g.vertex_names().to_vec();
        for _ in 0..200 {
            let x = random_word(&mut r, &gens, 10);
            let mut y = x.clone();
            for _ in 0..3 {
                y = insert_relator(&mut r, &y, &g);
                y = insert_free(&mut r, &y, &gens);
            }
            let z = if r.gen_bool(0.5) { insert_relator(&mut r, &y, &g) } else { random_word(&mut r, &gens, 10) };
            assert!(ctx.equal(&x, &x).unwrap());
            assert!(ctx.equal(&x, &y).unwrap(), "{name}: {x} vs {y}");
            assert!(ctx.equal(&y, &x).unwrap());
            let (xz, yz) = (ctx.equal(&x, &z).unwrap(), ctx.equal(&y, &z).unwrap());
            assert_eq!(xz, yz, "{name}: transitivity through {y}");
            assert_eq!(ctx.equal(&z, &x).unwrap(), xz);
            assert!(ctx.equal(&x.concat(&x.inverse()), &Word::empty()).unwrap());
        }
    }
}

#[test]
fn elementary_matches_brute_force_on_small_groups() {
    // Free group on a, c: nothing but free cancellation.
    let g = graph("vertex a\nvertex c");
    let ctx = CleanContext::new(g).unwrap();
    let mut oracle = RewritingOracle::new(&["a", "c"], &[], 6);
    let words = oracle.words_up_to(4);
    let classes: Vec<usize> = words.iter().map(|x| oracle.class(x)).collect();
    let keys: Vec<String> = words.iter().map(|x| ctx.normal_key(x).unwrap()).collect();
    assert_eq!(partition_mismatch(&classes, &keys), None);

    // Z × D_3 on the cone a * (b -3- c).
    let g = triangle(2, 3, 2);
    let ctx = CleanContext::new(g).unwrap();
    let relators = [w("a b a' b'"), w("a c a' c'"), w("b c b c' b' c'")];
    let mut oracle = RewritingOracle::new(&["a", "b", "c"], &relators, 6);
    let words = oracle.words_up_to(4);
    let classes: Vec<usize> = words.iter().map(|x| oracle.class(x)).collect();
    let keys: Vec<String> = words.iter().map(|x| ctx.normal_key(x).unwrap()).collect();
    assert_eq!(partition_mismatch(&classes, &keys), None);
}

#[test]
fn elementary_examples() {
    let ctx = CleanContext::new(path3(2, 2)).unwrap();
    assert!(ctx.equal(&w("b a c"), &w("a b c")).unwrap());
    let ctx = CleanContext::new(triangle(2, 5, 2)).unwrap();
    assert!(ctx.equal(&w("b c b c b a"), &w("a c b c b c")).unwrap());
    let ctx = CleanContext::new(graph("vertex a\nvertex c")).unwrap();
    assert!(!ctx.equal(&w("a c"), &w("c a")).unwrap());
    let ctx = CleanContext::new(dihedral(3)).unwrap();
    assert_eq!(ctx.normal_key(&w("abab")).unwrap(), ctx.normal_key(&w("aba b")).unwrap());
    assert!(ctx.normal_key(&w("abab")).unwrap().contains("Δ^1 · b"));
}

fn contexts() -> Vec<(GroupContext, Vec<String>)> {
    let mut out = Vec::new();
    for g in [p4(), path3(2, 2), triangle(2, 3, 2), graph("vertex a\nvertex b")] {
        let gens = g.vertex_names().to_vec();
        out.push((GroupContext::from_graph(g).unwrap(), gens));
    }
    out.push((GroupContext::Dihedral(artin_core::DihedralGroup::standard(3).unwrap()), vec!["a".into(), "b".into()]));
    out
}

#[test]
fn oracle_soundness_and_monotonicity() {
    let mut r = rng(21);
    for (ctx, names) in contexts() {
        for _ in 0..40 {
            let k = r.gen_range(1..=3);
            let gens: Vec<Word> = (0..k).map(|_| random_word(&mut r, &names, 3)).collect();
            let target = if r.gen_bool(0.6) {
                (0..r.gen_range(0..5)).fold(Word::empty(), |acc, _| acc.concat(&gens[r.gen_range(0..k)]))
            } else {
                random_word(&mut r, &names, 6)
            };
            let mut first_hit = None;
            for bound in 0..=5 {
                let res = member_submonoid(&ctx, &gens, &target, bound).unwrap();
                if let MembershipResult::Member { certificate: Certificate::Factorization(f), .. } = &res {
                    let product = f.iter().fold(Word::empty(), |acc, &i| acc.concat(&gens[i]));
                    assert_eq!(ctx.normal_key(&product).unwrap(), ctx.normal_key(&target).unwrap());
                    assert!(f.len() <= bound);
                    first_hit.get_or_insert(bound);
                } else {
                    assert!(first_hit.is_none(), "Member at a smaller bound, Unknown at {bound}");
                }
            }
            if let Some(b) = first_hit {
                let maxlen = gens.iter().map(Word::len).max().unwrap_or(0).max(1);
                let expr = RationalExpr::submonoid(&gens);
                let res = member_rational(&ctx, &expr, &target, b * maxlen).unwrap();
                assert!(res.is_member(), "rational search misses a submonoid member");
                if let MembershipResult::Member { certificate: Certificate::Word(cw), .. } = res {
                    assert_eq!(ctx.normal_key(&cw).unwrap(), ctx.normal_key(&target).unwrap());
                }
            }
        }
    }
}

/// The set of elements reached within a bound does not depend on the
/// order generators are explored in.
#[test]
fn oracle_reachable_set_is_order_independent() {
    let mut r = rng(22);
    let ctx = GroupContext::from_graph(path3(2, 2)).unwrap();
    let names = ["a", "b", "c"].map(String::from);
    let gens: Vec<Word> = (0..3).map(|_| random_word(&mut r, &names, 2)).collect();
    let mut shuffled = gens.clone();
    shuffled.reverse();
    let mut r = rng(24);
    for _ in 0..500 {
        let t = random_word(&mut r, &names, 4);
        assert_eq!(
            member_submonoid(&ctx, &gens, &t, 3).unwrap().is_member(),
            member_submonoid(&ctx, &shuffled, &t, 3).unwrap().is_member(),
            "{t}"
        );
    }
}
