//! Dynamic stream under the promise that the vertex cover never exceeds k.
//! Matched vertices own neighbourhood sketches that repair the matching when
//! one of its edges is deleted.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vc_stream::harness::{check_invariants, gen, oracle_vc};
use vc_stream::pdpsa::{census_bound, MatchingState, PdpsaOptions};
use vc_stream::{Config, ShadowGraph};

fn main() -> vc_stream::Result<()> {
    let (n, k) = (30, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let stream = gen::promised_stream(&mut rng, n, k, 500, 0.4);

    let cfg = Config::new(n, k).with_seed(1);
    println!("threshold x={} samples y={}", cfg.x(), cfg.y());
    let mut st = MatchingState::new(cfg.clone(), PdpsaOptions::audited())?;
    let mut shadow = ShadowGraph::new(n);
    for (i, &up) in stream.updates.iter().enumerate() {
        shadow.apply_update(up)?;
        st.apply(up)?;
        check_invariants(&st.view().expect("audited"), &shadow).expect("invariants hold");
        if (i + 1) % 100 == 0 {
            let c = st.census();
            println!(
                "t={:>3} live={:>3} |M|={} sketches={} |T|={} words={}",
                i + 1,
                shadow.edge_count(),
                c.matching,
                c.sketches,
                c.dict,
                c.words
            );
        }
    }

    let ev = st.events();
    println!(
        "rematches={} (low {}, high {}) released={} announcements={}",
        ev.rematches, ev.rematch_low, ev.rematch_high, ev.delete_neighborhoods, ev.announcements
    );
    println!("space bound {:.0} words", census_bound(&cfg));
    for q in [k - 1, k] {
        let got = st.query(q)?;
        let truth = oracle_vc(shadow.graph(), q)?;
        println!("k={q}: sketch answer {:?}, oracle {}", got, truth.is_yes());
    }
    Ok(())
}
