//! Feedback vertex set over an insertion-only stream: keep up to n(k+1)
//! edges, then solve exactly.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vc_stream::fvs::FvsState;
use vc_stream::harness::{gen, oracle_fvs};

fn main() -> vc_stream::Result<()> {
    let (n, k) = (12, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let g = gen::gnp(&mut rng, n, 0.3);
    let mut st = FvsState::new(n, k);
    for e in g.edges() {
        st.insert(e);
    }
    println!(
        "{} edges stored (gate {})",
        st.stored().edge_count(),
        st.gate()
    );
    for q in 0..=k {
        println!(
            "k={q}: answer {:?}, oracle {:?}",
            st.query(q),
            oracle_fvs(&g, q)?
        );
    }

    let mut dense = FvsState::new(n, k);
    for (i, e) in gen::complete_edges(n).into_iter().enumerate() {
        dense.insert(e);
        if dense.is_dead() {
            println!("K_{n}: dead after edge {}", i + 1);
            break;
        }
    }
    Ok(())
}
