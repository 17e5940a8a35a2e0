//! Latin-square brute force shared by the oracle and acceptance targets.

use std::collections::BTreeSet;

pub type Table = Vec<Vec<usize>>;

pub fn is_group(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
}

pub fn brace_law(add: &Table, circ: &Table) -> bool {
    let n = add.len();
    let inv: Vec<usize> = (0..n).map(|a| (0..n).find(|&b| add[a][b] == 0).unwrap()).collect();
    (0..n).all(|a| {
        (0..n).all(|b| (0..n).all(|c| circ[a][add[b][c]] == add[add[circ[a][b]][inv[a]]][circ[a][c]]))
    })
}

/// Every Latin square with row and column 0 the identity, kept when it is
/// associative and satisfies the brace law over `add`.
pub fn latin_oracle(add: &Table) -> BTreeSet<Table> {
    let n = add.len();
    let mut t: Table = (0..n).map(|a| (0..n).map(|b| if a == 0 { b } else if b == 0 { a } else { usize::MAX }).collect()).collect();
    let mut out = BTreeSet::new();
    fill(&mut t, 1, 1, add, &mut out);
    out
}

fn fill(t: &mut Table, r: usize, c: usize, add: &Table, out: &mut BTreeSet<Table>) {
    let n = t.len();
    if r == n {
        if is_group(t) && brace_law(add, t) {
            out.insert(t.clone());
        }
        return;
    }
    let (nr, nc) = if c + 1 == n { (r + 1, 1) } else { (r, c + 1) };
    for v in 0..n {
        let row_ok = (0..c).all(|j| t[r][j] != v);
        let col_ok = (0..r).all(|i| t[i][c] != v);
        if row_ok && col_ok {
            t[r][c] = v;
            fill(t, nr, nc, add, out);
        }
    }
    t[r][c] = usize::MAX;
}
