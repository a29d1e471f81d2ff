//! Insertion-only vertex cover: the deterministic algorithm keeps a maximal
//! matching plus at most k extra edges per matched vertex.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vc_stream::harness::gen;
use vc_stream::psa::PsaState;
use vc_stream::VcAnswer;

fn main() {
    let (n, k) = (16, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let stream = gen::promised_stream(&mut rng, n, k, 30, 0.0);
    println!("planted cover {:?}", stream.cover);

    let mut st = PsaState::new(k);
    for (i, up) in stream.updates.iter().enumerate() {
        st.insert(up.edge);
        if (i + 1) % 10 == 0 {
            let answer = match st.query(k) {
                VcAnswer::Yes(c) => format!("yes {c:?}"),
                other => format!("{other:?}"),
            };
            println!(
                "after {:>2} edges: |M|={} stored={} words={} -> {answer}",
                i + 1,
                st.matching().len(),
                st.stored_edges(),
                st.words()
            );
        }
    }

    // k + 1 disjoint edges end the run
    let mut dead = PsaState::new(k);
    for a in (1..=2 * (k + 1)).step_by(2) {
        dead.insert(vc_stream::Edge::new(a, a + 1).unwrap());
    }
    println!(
        "{} disjoint edges: dead={} answer={:?}",
        k + 1,
        dead.is_dead(),
        dead.query(k)
    );
}
