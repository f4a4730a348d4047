//! Comparisons of library results against the brute-force oracles.

use pic_kernel::branches::{
    kjoin_decomposition, max_kjoin, max_one_branch_from, max_two_branch, max_two_branch_through,
    maximal_kjoins_through,
};
use pic_kernel::Graph;

use super::*;

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut s = v.to_vec();
    s.sort_unstable();
    s
}


pub fn branch_mismatches(g: &Graph) -> Vec<String> {
    let r = rows(g);
    let mut bad = Vec::new();
    for x in g.vertices() {
        let ob = max_one_branch_from(g, x).unwrap();
        let want = brute_max_one_branch(&r, x);
        if ob.order[0] != x || !literal_one_branch(&r, &ob.order) || sorted(&ob.order) != want {
            bad.push(format!("1-branch {:?} x={x}: got {:?} want {:?}", g.edges().collect::<Vec<_>>(), ob.order, want));
        }

        let got = max_two_branch_through(g, x).unwrap();
        let want = brute_max_two_branch(&r, x, &[]);
        let ok = match (&got, &want) {
            (None, None) => true,
            (Some(tb), Some(w)) => {
                literal_two_branch(&r, &tb.order) && tb.body().contains(&x) && sorted(&tb.order) == *w
            }
            _ => false,
        };
        if !ok {
            bad.push(format!(
                "2-branch {:?} x={x}: got {:?} want {:?}",
                g.edges().collect::<Vec<_>>(),
                got.map(|t| t.order),
                want
            ));
        }
        if let Some(tb) = max_two_branch_through(g, x).unwrap() {
            let dec = kjoin_decomposition(g, &tb);
            let tiled: Vec<usize> = dec.blocks.concat();
            if tiled != tb.order || dec.blocks.iter().any(|b| !is_clique_on(&r, b)) {
                bad.push(format!("decomposition {:?}", dec.blocks));
            }
        }

        for b in maximal_kjoins_through(g, x).unwrap() {
            let got = max_two_branch(g, x, &b).unwrap();
            let want = brute_max_two_branch(&r, x, &b.order);
            let ok = match (&got, &want) {
                (None, None) => true,
                (Some(tb), Some(w)) => literal_two_branch(&r, &tb.order) && sorted(&tb.order) == *w,
                _ => false,
            };
            if !ok {
                bad.push(format!(
                    "2-branch {:?} x={x} b={:?}: got {:?} want {:?}",
                    g.edges().collect::<Vec<_>>(),
                    b.order,
                    got.map(|t| t.order),
                    want
                ));
            }
        }
    }
    for (u, v) in g.edges() {
        for (x, y) in [(u, v), (v, u)] {
            let kj = max_kjoin(g, x, y).unwrap();
            let want = brute_max_kjoin(&r, x, y);
            let o = &kj.order;
            let ends = o[0] == x && *o.last().unwrap() == y;
            if !ends || !is_clique_on(&r, o) || !literal_two_branch(&r, o) || sorted(o) != want {
                bad.push(format!("K-join {:?} {x}-{y}: got {:?} want {:?}", g.edges().collect::<Vec<_>>(), o, want));
            }
        }
    }
    bad
}
