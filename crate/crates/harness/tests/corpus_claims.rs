use eicolor_core::family::{complete, cycle, path};
use eicolor_core::{Budget, Graph, StructurePredicate};
use eicolor_harness::claims::corpus_instances;
use eicolor_harness::{check, evaluate, Claim, Eval, Params, Verdict};

#[test]
fn structural_corpora_hold() {
    for claim in Claim::ALL
        .into_iter()
        .filter(|c| !c.is_family() && *c != Claim::Observations)
    {
        let r = check(claim, &Params::Corpus, Budget::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{claim}: {:?}", r.note);
        assert!(r.instances > 0);
    }
}

#[test]
fn degree_bound_is_attained_by_odd_cycles() {
    let r = check(Claim::DegreeBound, &Params::Corpus, Budget::default()).unwrap();
    assert!(r.note.unwrap().starts_with("notable: "));
    for g in [cycle(5), cycle(7)] {
        let e = evaluate(Claim::DegreeBound, &[g], Budget::default()).unwrap();
        assert_eq!(
            e,
            Eval::Holds {
                chi: Some(3),
                note: Some("equality at 3".into())
            }
        );
    }
}

/// The 2-distance half of the observations needs every edge to lie on a P3.
/// Graphs whose edges are isolated satisfy the hypothesis vacuously yet
/// need two colors for a 2-distance coloring and one for e-injective.
#[test]
fn isolated_edges_break_the_two_distance_observation() {
    let k2 = path(2);
    let e = evaluate(Claim::Observations, &[k2], Budget::default()).unwrap();
    match e {
        Eval::Violated(why) => assert!(why.starts_with("p3-pairs-are-p4-ends"), "{why}"),
        other => panic!("{other:?}"),
    }
    let r = check(Claim::Observations, &Params::Corpus, Budget::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    for (label, graphs) in corpus_instances(Claim::Observations) {
        let g: &Graph = &graphs[0];
        if let Eval::Violated(why) =
            evaluate(Claim::Observations, &graphs, Budget::default()).unwrap()
        {
            assert_eq!(g.max_degree(), 1, "{label}: {why}");
            assert!(!why.contains(';'), "{label}: {why}");
        } else if g.max_degree() == 1 {
            panic!("{label}: an induced matching should violate");
        }
    }
}

#[test]
fn observations_hold_once_every_edge_is_on_a_p3() {
    for g in [cycle(5), complete(5), path(6), cycle(3), complete(4)] {
        assert!(g.n() >= 3);
        let e = evaluate(Claim::Observations, &[g], Budget::default()).unwrap();
        assert!(matches!(e, Eval::Holds { .. }), "{e:?}");
    }
    assert!(eicolor_core::transform::structure_predicate(
        &path(2),
        StructurePredicate::P3PairsAreP4Ends
    ));
}
