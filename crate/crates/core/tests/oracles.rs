//! Cross-checks of the exact solvers and generators against brute force.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vc_stream::dpsa::DpsaState;
use vc_stream::fvs::{fvs_decide, FvsAnswer};
use vc_stream::harness::{gen, min_fvs, min_vertex_cover, oracle_vc};
use vc_stream::kernel::vc_decide;
use vc_stream::psa::PsaState;
use vc_stream::{Config, Cover, Graph, ShadowGraph, StreamUpdate, VcAnswer};

#[test]
fn vc_decide_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..500 {
        let n = rng.gen_range(2..=20);
        let p = rng.gen_range(0.05..0.4);
        let g = gen::gnp(&mut rng, n, p);
        let k = rng.gen_range(0..=6);
        let got = vc_decide(&g, k);
        assert_eq!(got.is_yes(), oracle_vc(&g, k).unwrap().is_yes());
        if let VcAnswer::Yes(c) = got {
            assert!(c.len() <= k as usize && g.is_covered_by(&c));
        }
    }
}

#[test]
fn psa_is_deterministic_and_monotone() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..100 {
        let n = rng.gen_range(4..=16);
        let k = rng.gen_range(0..=4);
        let edges = gen::insertion_stream(&mut rng, n, 2 * n as usize);
        let (mut a, mut b) = (PsaState::new(k), PsaState::new(k));
        let mut seen_no = false;
        for &e in &edges {
            a.insert(e);
            b.insert(e);
            assert_eq!(a, b);
            let yes = a.query(k).is_yes();
            assert!(!(seen_no && yes), "answer went from No back to Yes");
            seen_no |= !yes;
        }
    }
}

#[test]
fn dpsa_state_ignores_update_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let ups = gen::dynamic_stream(&mut rng, 20, 300, 60, 0.3);
    let cfg = Config::new(20, 3).with_seed(4);
    let mut a = DpsaState::new(cfg.clone()).unwrap();
    for &up in &ups {
        a.update(up);
    }
    let mut b = DpsaState::new(cfg).unwrap();
    for &up in ups.iter().rev() {
        b.update(up);
    }
    assert_eq!(a, b);
}

#[test]
fn distinct_estimate_is_exact_below_capacity() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut within = 0;
    let trials = 40;
    for t in 0..trials {
        let mut st = DpsaState::new_approx(Config::new(100, 10).with_seed(t)).unwrap();
        let edges = gen::insertion_stream(&mut rng, 100, 1000);
        for &e in &edges {
            st.update(StreamUpdate::insert(e));
            if rng.gen_bool(0.2) {
                st.update(StreamUpdate::insert(e));
            }
        }
        let est = st.distinct_edge_estimate().unwrap() as f64;
        within += ((est - 1000.0).abs() <= 10.0) as u32;
    }
    assert!(within as f64 >= 0.99 * trials as f64);
}

#[test]
fn promised_prefixes_satisfy_the_promise() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..100 {
        let n = rng.gen_range(6..=24);
        let k = rng.gen_range(1..=4);
        let churn = rng.gen_range(0.0..0.5);
        let s = gen::promised_stream(&mut rng, n, k, 150, churn);
        let mut sh = ShadowGraph::new(n);
        for up in s.updates {
            sh.apply_update(up).unwrap();
            assert!(oracle_vc(sh.graph(), k).unwrap().is_yes());
        }
    }
}

#[test]
fn index_gadget_examples() {
    let zeros = vec![vec![false; 2]; 2];
    assert_eq!(min_vertex_cover(&gen::index_gadget(&zeros, 1, 1)), Ok(2));
    let one = vec![vec![true, false], vec![false, false]];
    let g = gen::index_gadget(&one, 1, 1);
    assert_eq!(min_vertex_cover(&g), Ok(3));
    assert_eq!(vc_decide(&g, 2), VcAnswer::No);
    assert!(vc_decide(&g, 3).is_yes());
}

#[test]
fn fvs_matches_small_oracle_and_planted_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..100 {
        let n = rng.gen_range(3..=12u32);
        let p = rng.gen_range(0.1..0.5);
        let g = gen::gnp(&mut rng, n, p);
        let best = min_fvs(&g).unwrap();
        assert!(fvs_decide(&g, best as u32).is_yes());
        if best > 0 {
            assert_eq!(fvs_decide(&g, best as u32 - 1), FvsAnswer::No);
        }
        // n(k+1) edge bound for graphs with a feedback vertex set of size k
        assert!(g.edge_count() <= n as usize * (best + 1));
    }
}

#[test]
fn disjointness_examples() {
    let empty = Cover::new();
    assert!(gen::disjointness_gadget(&[false], &[false]).is_acyclic_without(&empty));
    assert!(!gen::disjointness_gadget(&[true], &[true]).is_acyclic_without(&empty));
    let g: Graph = gen::disjointness_gadget(&[true, false], &[true, true]);
    assert_eq!(fvs_decide(&g, 0), FvsAnswer::No);
}
