//! Brute-force isomorphism of labeled plumbing graphs. Labels are genus,
//! Euler weight and number of legs; edge multiplicities must match.

use std::collections::BTreeMap;

use super::{PlumbingGraph, VertexId};

type Label = (u32, i64, usize);

struct View {
    labels: Vec<Label>,
    degree: Vec<usize>,
    adj: Vec<Vec<usize>>,
}

impl View {
    fn new(g: &PlumbingGraph) -> Self {
        let n = g.vertices.len();
        let index: BTreeMap<VertexId, usize> = g.vertices.iter().enumerate().map(|(i, v)| (v.id, i)).collect();
        let mut adj = vec![vec![0; n]; n];
        for &(a, b) in &g.edges {
            let (i, j) = (index[&a], index[&b]);
            adj[i][j] += 1;
            adj[j][i] += 1;
        }
        let labels = g.vertices.iter().map(|v| (v.genus, v.euler_weight, g.legs_at(v.id))).collect();
        let degree = adj.iter().map(|row| row.iter().sum()).collect();
        View { labels, degree, adj }
    }

    /// Label, degree and sorted neighbor labels: an isomorphism invariant per vertex.
    fn signature(&self, i: usize) -> (Label, usize, Vec<(Label, usize)>) {
        let mut nbrs: Vec<(Label, usize)> = (0..self.labels.len())
            .filter(|&j| self.adj[i][j] > 0)
            .map(|j| (self.labels[j], self.adj[i][j]))
            .collect();
        nbrs.sort();
        (self.labels[i], self.degree[i], nbrs)
    }
}

impl PlumbingGraph {
    /// Whether the two graphs are isomorphic respecting genus, weight and legs.
    pub fn is_isomorphic(&self, other: &PlumbingGraph) -> bool {
        let (a, b) = (View::new(self), View::new(other));
        let n = a.labels.len();
        if n != b.labels.len() || self.edges.len() != other.edges.len() || self.legs.len() != other.legs.len() {
            return false;
        }
        let sig_a: Vec<_> = (0..n).map(|i| a.signature(i)).collect();
        let sig_b: Vec<_> = (0..n).map(|i| b.signature(i)).collect();
        let mut sorted_a = sig_a.clone();
        let mut sorted_b = sig_b.clone();
        sorted_a.sort();
        sorted_b.sort();
        if sorted_a != sorted_b {
            return false;
        }
        let candidates: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| sig_a[i] == sig_b[j]).collect()).collect();
        // Assign the most constrained vertices first.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| candidates[i].len());
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        extend(&a, &b, &order, &candidates, 0, &mut map, &mut used)
    }
}

fn extend(
    a: &View,
    b: &View,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&i) = order.get(depth) else {
        return true;
    };
    for &j in &candidates[i] {
        if used[j] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&k| a.adj[i][k] == b.adj[j][map[k]]);
        if !consistent {
            continue;
        }
        map[i] = j;
        used[j] = true;
        if extend(a, b, order, candidates, depth + 1, map, used) {
            return true;
        }
        used[j] = false;
        map[i] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_bamboo_is_isomorphic() {
        let g = PlumbingGraph::bamboo(&[-2, -3, -5]);
        let h = PlumbingGraph::bamboo(&[-5, -3, -2]);
        assert!(g.is_isomorphic(&h));
        assert!(!g.is_isomorphic(&PlumbingGraph::bamboo(&[-3, -2, -5])));
    }

    #[test]
    fn cycle_versus_path() {
        let c = PlumbingGraph::circuit(&[-2; 4]).unwrap();
        let mut p = PlumbingGraph::bamboo(&[-2; 4]);
        assert!(!c.is_isomorphic(&p));
        p.add_edge(0, 3).unwrap();
        assert!(c.is_isomorphic(&p));
    }

    #[test]
    fn legs_and_genus_are_labels() {
        let mut g = PlumbingGraph::bamboo(&[-2, -2]);
        let mut h = g.clone();
        g.add_leg(0).unwrap();
        assert!(!g.is_isomorphic(&h));
        h.add_leg(1).unwrap();
        assert!(g.is_isomorphic(&h));
        h.vertex_mut(0).unwrap().genus = 1;
        assert!(!g.is_isomorphic(&h));
    }

    #[test]
    fn regular_graphs_need_search() {
        // Two 2-regular graphs on six vertices: a hexagon and two triangles.
        let hex = PlumbingGraph::circuit(&[-2; 6]).unwrap();
        let tri = PlumbingGraph::circuit(&[-2; 3]).unwrap();
        let (two, _) = tri.disjoint_union(&tri);
        assert!(!hex.is_isomorphic(&two));
        assert!(two.is_isomorphic(&two.clone()));
    }
}
