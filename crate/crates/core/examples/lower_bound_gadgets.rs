//! The two lower-bound constructions: the index gadget, whose minimum vertex
//! cover reveals one bit of a k×k matrix, and the disjointness gadget, which
//! is acyclic exactly when two bit strings are disjoint.

use vc_stream::harness::{gen, min_vertex_cover};
use vc_stream::kernel::vc_decide;
use vc_stream::Cover;

fn main() -> vc_stream::Result<()> {
    let k = 3;
    let x = vec![
        vec![true, false, true],
        vec![false, true, false],
        vec![true, true, false],
    ];
    for (i, j) in [(1, 1), (1, 2), (3, 3)] {
        let g = gen::index_gadget(&x, i, j);
        println!(
            "X[{i}][{j}]={} min cover={} decide(2k-2)={}",
            x[i as usize - 1][j as usize - 1] as u8,
            min_vertex_cover(&g)?,
            vc_decide(&g, 2 * k - 2).is_yes()
        );
    }

    for (xs, ys) in [("0110", "1001"), ("0110", "0010")] {
        let bits = |s: &str| s.chars().map(|c| c == '1').collect::<Vec<bool>>();
        let g = gen::disjointness_gadget(&bits(xs), &bits(ys));
        println!(
            "x={xs} y={ys}: {} vertices, {} edges, acyclic={}",
            g.vertex_count(),
            g.edge_count(),
            g.is_acyclic_without(&Cover::new())
        );
    }
    Ok(())
}
