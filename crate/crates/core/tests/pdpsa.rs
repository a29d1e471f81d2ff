use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vc_stream::harness::{check_invariants, gen, oracle_vc};
use vc_stream::pdpsa::{DegreeMode, MatchingState, PdpsaOptions};
use vc_stream::{Config, Edge, ShadowGraph, StreamUpdate, VertexId};

fn e(a: u32, b: u32) -> Edge {
    Edge::new(a, b).unwrap()
}

fn audited(n: u32, k: u32, seed: u64) -> MatchingState {
    MatchingState::new(Config::new(n, k).with_seed(seed), PdpsaOptions::audited()).unwrap()
}

/// Feeds `ups` to a fresh audited state, checking invariants after each one.
fn replay(st: &mut MatchingState, ups: &[StreamUpdate]) -> ShadowGraph {
    let mut sh = ShadowGraph::new(st.config().n);
    for &up in ups {
        sh.apply_update(up).unwrap();
        st.apply(up).unwrap();
        if let Err(v) = check_invariants(&st.view().unwrap(), &sh) {
            panic!("after update {}: {v:?}", sh.clock());
        }
    }
    sh
}

#[test]
fn step_through_insertions() {
    let mut st = audited(6, 2, 0);
    replay(
        &mut st,
        &[
            StreamUpdate::insert(e(1, 4)),
            StreamUpdate::insert(e(2, 3)),
            StreamUpdate::insert(e(3, 4)),
        ],
    );
    assert!(st.dict().contains(&e(3, 4)));
    let view = st.view().unwrap();
    assert!(view.sketched[&VertexId(3)].contains(&VertexId(4)));
    assert!(view.sketched[&VertexId(4)].contains(&VertexId(3)));
}

#[test]
fn path_rematch_step_through() {
    let mut st = audited(3, 1, 0);
    replay(
        &mut st,
        &[
            StreamUpdate::insert(e(1, 2)),
            StreamUpdate::insert(e(2, 3)),
            StreamUpdate::delete(e(1, 2)),
        ],
    );
    assert_eq!(st.matching().into_iter().collect::<Vec<_>>(), vec![e(2, 3)]);
}

#[test]
fn random_promised_streams_keep_invariants_and_answer_correctly() {
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    for run in 0..30u64 {
        let n = rng.gen_range(8..=40);
        let k = rng.gen_range(1..=4);
        let s = gen::promised_stream(&mut rng, n, k, 400, 0.4);
        let mut st = audited(n, k, run);
        let sh = replay(&mut st, &s.updates);
        let truth = oracle_vc(sh.graph(), k).unwrap().is_yes();
        assert_eq!(st.query(k).unwrap().is_yes(), truth);
        assert!(st.events().rematches > 0, "run {run} never rematched");
    }
}

#[test]
fn timestamps_only_move_forward() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for run in 0..30u64 {
        let n = rng.gen_range(8..=30);
        let k = rng.gen_range(1..=4);
        let s = gen::promised_stream(&mut rng, n, k, 300, 0.4);
        let mut st = audited(n, k, run);
        let mut last: BTreeMap<VertexId, u64> = BTreeMap::new();
        for up in s.updates {
            let before = st.matching();
            st.apply(up).unwrap();
            // a new matching edge always has an endpoint matched just now
            for m in st.matching().difference(&before) {
                let (tu, tv) = (st.timestamp(m.u()).unwrap(), st.timestamp(m.v()).unwrap());
                assert_eq!(tu.max(tv), st.clock());
            }
            for v in (1..=n).map(VertexId) {
                if let Some(t) = st.timestamp(v) {
                    assert!(t <= st.clock());
                    if let Some(&prev) = last.get(&v) {
                        assert!(t >= prev, "timestamp of {v} went back");
                    }
                    last.insert(v, t);
                }
            }
        }
    }
}

#[test]
fn small_sketches_exercise_high_degree_branch() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut high = 0;
    for run in 0..60u64 {
        let n = rng.gen_range(20..=40);
        let k = rng.gen_range(1..=3);
        let s = gen::promised_stream(&mut rng, n, k, 600, 0.4);
        let cfg = Config::new(n, k).with_seed(run).with_alpha(0.1);
        let mut st = MatchingState::new(cfg, PdpsaOptions::audited()).unwrap();
        let mut sh = ShadowGraph::new(n);
        for up in &s.updates {
            sh.apply_update(*up).unwrap();
            if st.apply(*up).is_err() {
                break;
            }
            if let Err(v) = check_invariants(&st.view().unwrap(), &sh) {
                panic!("run {run} at {}: {v:?}", sh.clock());
            }
        }
        high += st.events().rematch_high;
    }
    assert!(high > 0);
}

#[test]
fn exact_degree_mode_agrees_with_sketched_mode() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for run in 0..30u64 {
        let n = rng.gen_range(8..=30);
        let k = rng.gen_range(1..=4);
        let s = gen::promised_stream(&mut rng, n, k, 300, 0.35);
        let cfg = Config::new(n, k).with_seed(run);
        let mut strict = MatchingState::new(
            cfg.clone(),
            PdpsaOptions {
                degree_mode: DegreeMode::Exact,
                audit: true,
            },
        )
        .unwrap();
        let mut loose = MatchingState::new(cfg, PdpsaOptions::audited()).unwrap();
        let sh = replay(&mut strict, &s.updates);
        replay(&mut loose, &s.updates);
        for q in [k - 1, k] {
            let truth = oracle_vc(sh.graph(), q).unwrap().is_yes();
            assert_eq!(strict.query(q).unwrap().is_yes(), truth);
            assert_eq!(loose.query(q).unwrap().is_yes(), truth);
        }
    }
}

/// A star whose centre has degree above the threshold: deleting the centre's
/// matching edge forces the sampling branch of the rematch.
#[test]
fn high_degree_star_rematch_rarely_misses() {
    let leaves = 150u32;
    let n = leaves + 1;
    let trials = 1000u64;
    let mut misses = 0;
    let mut x = 0;
    for seed in 0..trials {
        let mut st =
            MatchingState::new(Config::new(n, 1).with_seed(seed), PdpsaOptions::default()).unwrap();
        x = st.threshold();
        for leaf in 2..=n {
            st.insertion(e(1, leaf)).unwrap();
        }
        match st.deletion(e(1, 2)) {
            Ok(()) => {
                assert_eq!(st.matching_len(), 1);
                assert_eq!(st.events().rematch_high, 1);
            }
            Err(_) => misses += 1,
        }
    }
    assert!(leaves as usize - 1 > x, "centre must be high degree");
    let rate = misses as f64 / trials as f64;
    assert!(rate <= 0.01, "miss rate {rate}");
}
