//! Linear sketches: sampling a uniform support element and recovering the
//! whole support after insertions and deletions.

use std::collections::BTreeMap;

use vc_stream::sketch::{field, repetitions, SampleOutcome, SampleRecovery, SketchParams};

fn main() {
    let params = SketchParams {
        universe: 1000,
        capacity: 16,
        rows: 8,
        bank: 4,
        reps: repetitions(0.01),
    };

    let mut s = SampleRecovery::new(params, 42);
    for i in [3, 17, 99, 250, 251, 600] {
        s.update(i, 1);
    }
    s.update(99, -1);
    s.update(600, -1);
    println!("support size {}", s.support());
    println!("recovered {:?}", s.recover());
    for w in 0..params.bank {
        println!("sampler {w}: {:?}", s.sample(w));
    }
    println!("words {}", s.words());

    // a different seed per draw gives a uniform element of {5, 6, 7, 8}
    let mut counts: BTreeMap<u64, u32> = BTreeMap::new();
    for t in 0..4000 {
        let mut s = SampleRecovery::new(params, field::derive_seed(1, &[t]));
        for i in 5..=8 {
            s.update(i, 1);
        }
        if let SampleOutcome::Index(i) = s.sample(0) {
            *counts.entry(i).or_default() += 1;
        }
    }
    println!("draw counts {counts:?}");
}
