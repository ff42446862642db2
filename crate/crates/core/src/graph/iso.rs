use std::collections::BTreeMap;

use super::{MultiGraph, VertexId};

/// Isomorphism test for small multigraphs (loops and parallel edges count).
pub fn isomorphic(a: &MultiGraph, b: &MultiGraph) -> bool {
    colored_isomorphic(a, &vec![0; a.vertex_count()], b, &vec![0; b.vertex_count()])
}

type Multiplicity = BTreeMap<(VertexId, VertexId), usize>;

fn multiplicities(g: &MultiGraph) -> Multiplicity {
    let mut m = Multiplicity::new();
    for &[x, y] in g.edges() {
        *m.entry((x.min(y), x.max(y))).or_default() += 1;
    }
    m
}

fn mult(m: &Multiplicity, x: VertexId, y: VertexId) -> usize {
    m.get(&(x.min(y), x.max(y))).copied().unwrap_or(0)
}

// Colour, degree, loop count and sorted neighbor degrees.
fn signature(g: &MultiGraph, colors: &[u32], m: &Multiplicity, v: VertexId) -> (u32, usize, usize, Vec<usize>) {
    let mut nbr: Vec<usize> = g.neighbors(v).iter().map(|&(w, _)| g.degree(w)).collect();
    nbr.sort_unstable();
    (colors[v], g.degree(v), mult(m, v, v), nbr)
}

/// Isomorphism test that must map each vertex to one of the same colour.
/// Backtracking with signature pruning; intended for graphs of a few dozen
/// vertices.
pub fn colored_isomorphic(a: &MultiGraph, ca: &[u32], b: &MultiGraph, cb: &[u32]) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let (ma, mb) = (multiplicities(a), multiplicities(b));
    let sig_a: Vec<_> = (0..n).map(|v| signature(a, ca, &ma, v)).collect();
    let sig_b: Vec<_> = (0..n).map(|v| signature(b, cb, &mb, v)).collect();
    let (mut sa, mut sb) = (sig_a.clone(), sig_b.clone());
    sa.sort();
    sb.sort();
    if sa != sb {
        return false;
    }

    // Visit `a` in BFS order so each new vertex is adjacent to mapped ones.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for root in 0..n {
        if placed[root] {
            continue;
        }
        placed[root] = true;
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &(w, _) in a.neighbors(v) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
        }
    }

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(0, &order, &sig_a, &sig_b, &ma, &mb, &mut image, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    depth: usize,
    order: &[VertexId],
    sig_a: &[(u32, usize, usize, Vec<usize>)],
    sig_b: &[(u32, usize, usize, Vec<usize>)],
    ma: &Multiplicity,
    mb: &Multiplicity,
    image: &mut [VertexId],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..sig_b.len() {
        if used[w] || sig_a[v] != sig_b[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| mult(ma, u, v) == mult(mb, image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend(depth + 1, order, sig_a, sig_b, ma, mb, image, used) {
            return true;
        }
        used[w] = false;
        image[v] = usize::MAX;
    }
    false
}
