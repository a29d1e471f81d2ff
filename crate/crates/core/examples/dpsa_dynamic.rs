//! Unrestricted dynamic stream: one sparse-recovery sketch over all edge
//! slots, rejecting outright once more than n*k edges are live.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vc_stream::dpsa::DpsaState;
use vc_stream::harness::{gen, oracle_vc};
use vc_stream::{Config, ShadowGraph, StreamUpdate};

fn main() -> vc_stream::Result<()> {
    let (n, k) = (24, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let cfg = Config::new(n, k).with_seed(2);
    let mut st = DpsaState::new(cfg)?;
    let mut shadow = ShadowGraph::new(n);
    for up in gen::dynamic_stream(&mut rng, n, 400, (n * k) as usize, 0.35) {
        shadow.apply_update(up)?;
        st.update(up);
    }
    println!(
        "capacity={} live={} words={}",
        st.capacity(),
        st.live(),
        st.words()
    );
    let out = st.query(k)?;
    println!("answer {:?} via {:?}", out.answer, out.recovery);
    println!("oracle {:?}", oracle_vc(shadow.graph(), k)?.is_yes());

    // pushing past n*k live edges trips the gate without any recovery
    for e in gen::complete_edges(n) {
        if !shadow.contains_edge(e) {
            shadow.apply_update(StreamUpdate::insert(e))?;
            st.update(StreamUpdate::insert(e));
        }
    }
    let out = st.query(k)?;
    println!(
        "complete graph: live={} answer {:?} via {:?}",
        st.live(),
        out.answer,
        out.recovery
    );

    // duplicate-tolerant mode gates on a distinct-edge estimate
    let mut approx = DpsaState::new_approx(Config::new(n, k))?;
    for e in gen::complete_edges(n).into_iter().take(40) {
        approx.update(StreamUpdate::insert(e));
        approx.update(StreamUpdate::insert(e));
    }
    println!(
        "approx mode: net insertions={} distinct estimate={}",
        approx.live(),
        approx.distinct_edge_estimate()?
    );
    Ok(())
}
