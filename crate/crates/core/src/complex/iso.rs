use std::collections::VecDeque;

use super::TubularComplex;

impl TubularComplex {
    /// Isomorphism of tubular graphs of graphs: a bijection of vertices
    /// preserving vertical adjacency under which the tubes correspond, up to
    /// swapping ends and rotating or reflecting circles. Names are ignored.
    ///
    /// Backtracking search; intended for small complexes.
    pub fn is_isomorphic(&self, other: &TubularComplex) -> bool {
        let a = Skeleton::new(self);
        let b = Skeleton::new(other);
        if a.adjacency.len() != b.adjacency.len()
            || self.cell_counts() != other.cell_counts()
            || self.graphs.len() != other.graphs.len()
            || self.tubes.len() != other.tubes.len()
        {
            return false;
        }
        let mut sa = a.signature.clone();
        let mut sb = b.signature.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return false;
        }
        let target_keys = {
            let mut k: Vec<Vec<usize>> = b.tubes.iter().map(|t| tube_key(t, &|v| v)).collect();
            k.sort();
            k
        };
        let order = a.bfs_order();
        let mut map = vec![usize::MAX; a.adjacency.len()];
        let mut used = vec![false; b.adjacency.len()];
        extend(&a, &b, &order, 0, &mut map, &mut used, &target_keys)
    }
}

struct Skeleton {
    adjacency: Vec<Vec<usize>>,
    signature: Vec<(usize, Vec<usize>, usize)>,
    /// Global tail sequences of both ends of each tube.
    tubes: Vec<[Vec<usize>; 2]>,
}

impl Skeleton {
    fn new(c: &TubularComplex) -> Skeleton {
        let offsets: Vec<usize> = c
            .graphs
            .iter()
            .scan(0, |acc, vg| {
                let o = *acc;
                *acc += vg.graph.vertex_count();
                Some(o)
            })
            .collect();
        let n: usize = c.graphs.iter().map(|g| g.graph.vertex_count()).sum();
        let table = c.thickness_table();
        let mut adjacency = vec![Vec::new(); n];
        let mut thick = vec![Vec::new(); n];
        for (s, vg) in c.graphs.iter().enumerate() {
            for (e, &[x, y]) in vg.graph.edges().iter().enumerate() {
                let (x, y) = (offsets[s] + x, offsets[s] + y);
                adjacency[x].push(y);
                adjacency[y].push(x);
                thick[x].push(table[s][e]);
                thick[y].push(table[s][e]);
            }
        }
        let mut visits = vec![0; n];
        let tubes = c
            .tubes
            .iter()
            .map(|t| {
                [0, 1].map(|side| {
                    let end = &t.ends[side];
                    let g = c.graph(end.graph);
                    end.walk
                        .iter()
                        .map(|s| {
                            let v = offsets[end.graph] + s.tail(g);
                            visits[v] += 1;
                            v
                        })
                        .collect()
                })
            })
            .collect();
        let signature = (0..n)
            .map(|v| {
                let mut t = thick[v].clone();
                t.sort();
                (adjacency[v].len(), t, visits[v])
            })
            .collect();
        Skeleton {
            adjacency,
            signature,
            tubes,
        }
    }

    fn bfs_order(&self) -> Vec<usize> {
        let n = self.adjacency.len();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        order
    }
}

/// Least rotation/reflection/end-swap of a tube's tail sequences.
fn tube_key(t: &[Vec<usize>; 2], f: &dyn Fn(usize) -> usize) -> Vec<usize> {
    let len = t[0].len();
    let mapped = [0, 1].map(|side| t[side].iter().map(|&v| f(v)).collect::<Vec<_>>());
    let mut best: Option<Vec<usize>> = None;
    for swap in [false, true] {
        let (x, y) = if swap { (&mapped[1], &mapped[0]) } else { (&mapped[0], &mapped[1]) };
        for reflect in [false, true] {
            for r in 0..len {
                // Reflecting the circle reads tails as t[0], t[L-1], ..., t[1].
                let idx = |i: usize| if reflect { (r + len - i) % len } else { (r + i) % len };
                let key: Vec<usize> = (0..len).map(|i| x[idx(i)]).chain((0..len).map(|i| y[idx(i)])).collect();
                if best.as_ref().is_none_or(|b| key < *b) {
                    best = Some(key);
                }
            }
        }
    }
    best.unwrap_or_default()
}

fn extend(
    a: &Skeleton,
    b: &Skeleton,
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    target_keys: &[Vec<usize>],
) -> bool {
    if depth == order.len() {
        let mut keys: Vec<Vec<usize>> = a.tubes.iter().map(|t| tube_key(t, &|v| map[v])).collect();
        keys.sort();
        return keys == target_keys;
    }
    let x = order[depth];
    let mapped_nbrs: Vec<usize> = a.adjacency[x].iter().filter(|&&w| map[w] != usize::MAX).copied().collect();
    let candidates: Vec<usize> = match mapped_nbrs.first() {
        Some(&w) => b.adjacency[map[w]].clone(),
        None => (0..b.adjacency.len()).collect(),
    };
    for y in candidates {
        if used[y] || a.signature[x] != b.signature[y] {
            continue;
        }
        if !mapped_nbrs.iter().all(|&w| b.adjacency[y].contains(&map[w])) {
            continue;
        }
        let mapped_count = b.adjacency[y].iter().filter(|&&z| used[z]).count();
        if mapped_count != mapped_nbrs.len() {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend(a, b, order, depth + 1, map, used, target_keys) {
            return true;
        }
        map[x] = usize::MAX;
        used[y] = false;
    }
    false
}
