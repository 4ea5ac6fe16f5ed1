use crate::error::GraphError;
use crate::MAX_VERTICES;

/// Edge of an r-graph, stored as a bitmask over vertices 1..=n (vertex v is bit v-1).
pub type EdgeMask = u128;

/// Builds the bitmask for a set of 1-based vertex labels.
pub fn mask_of(vertices: &[usize]) -> EdgeMask {
    let mut m = 0;
    for &v in vertices {
        m |= 1u128 << (v - 1);
    }
    m
}

/// Expands a bitmask into ascending 1-based vertex labels.
pub fn mask_vertices(mask: EdgeMask) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize + 1);
        m &= m - 1;
    }
    out
}

/// Compares two edge masks by the lexicographic order of their ascending vertex lists.
pub fn lex_cmp(a: EdgeMask, b: EdgeMask) -> std::cmp::Ordering {
    let mut x = a;
    let mut y = b;
    while x != 0 && y != 0 {
        let vx = x.trailing_zeros();
        let vy = y.trailing_zeros();
        match vx.cmp(&vy) {
            std::cmp::Ordering::Equal => {
                x &= x - 1;
                y &= y - 1;
            }
            other => return other,
        }
    }
    x.count_ones().cmp(&y.count_ones())
}

/// An immutable r-uniform hypergraph on vertex set `[n] = {1, ..., n}`.
///
/// Edges are strictly sorted r-subsets of `[n]`, stored deduplicated in a fixed
/// internal order, so structural equality of `(r, n, edges)` is plain `==`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: Vec<EdgeMask>,
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hypergraph(r={}, n={}, edges=[", self.r, self.n)?;
        for (k, e) in self.edges_lex().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let labels: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            write!(f, "{{{}}}", labels.join(","))?;
        }
        write!(f, "])")
    }
}

impl Hypergraph {
    /// Validates and normalizes (sorts, deduplicates) an edge list.
    pub fn build(r: usize, n: usize, edges: &[Vec<usize>]) -> Result<Self, GraphError> {
        if r < 2 {
            return Err(GraphError::UniformityTooSmall(r));
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut masks = Vec::with_capacity(edges.len());
        for e in edges {
            for &v in e {
                if v == 0 || v > n {
                    return Err(GraphError::VertexOutOfRange {
                        edge: e.clone(),
                        vertex: v,
                        n,
                    });
                }
            }
            let m = mask_of(e);
            let got = m.count_ones() as usize;
            if got != r {
                return Err(GraphError::WrongArity {
                    edge: e.clone(),
                    got,
                    expected: r,
                });
            }
            masks.push(m);
        }
        Ok(Self::from_masks_unchecked(r, n, masks))
    }

    /// Builds from pre-validated masks; callers must guarantee each mask has
    /// exactly r bits, all within 1..=n.
    pub fn from_masks(r: usize, n: usize, masks: Vec<EdgeMask>) -> Result<Self, GraphError> {
        if r < 2 {
            return Err(GraphError::UniformityTooSmall(r));
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let full = if n == MAX_VERTICES {
            !0u128
        } else {
            (1u128 << n) - 1
        };
        for &m in &masks {
            if m.count_ones() as usize != r {
                return Err(GraphError::WrongArity {
                    edge: mask_vertices(m),
                    got: m.count_ones() as usize,
                    expected: r,
                });
            }
            if m & !full != 0 {
                let v = (m & !full).trailing_zeros() as usize + 1;
                return Err(GraphError::VertexOutOfRange {
                    edge: mask_vertices(m),
                    vertex: v,
                    n,
                });
            }
        }
        Ok(Self::from_masks_unchecked(r, n, masks))
    }

    fn from_masks_unchecked(r: usize, n: usize, mut masks: Vec<EdgeMask>) -> Self {
        masks.sort_unstable();
        masks.dedup();
        Hypergraph { r, n, edges: masks }
    }

    /// Edgeless r-graph on `[n]`.
    pub fn empty(r: usize, n: usize) -> Result<Self, GraphError> {
        Self::build(r, n, &[])
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edge masks in the internal (numeric) order.
    pub fn edge_masks(&self) -> &[EdgeMask] {
        &self.edges
    }

    /// Edges as ascending vertex lists, sorted lexicographically.
    pub fn edges_lex(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.edges.iter().map(|&m| mask_vertices(m)).collect();
        out.sort();
        out
    }

    pub fn has_edge_mask(&self, m: EdgeMask) -> bool {
        self.edges.binary_search(&m).is_ok()
    }

    pub fn has_edge(&self, vertices: &[usize]) -> bool {
        self.has_edge_mask(mask_of(vertices))
    }

    pub fn degree(&self, v: usize) -> usize {
        let bit = 1u128 << (v - 1);
        self.edges.iter().filter(|&&e| e & bit != 0).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &e in &self.edges {
            let mut m = e;
            while m != 0 {
                d[m.trailing_zeros() as usize] += 1;
                m &= m - 1;
            }
        }
        d
    }

    /// `I_G(i)`: the edges containing vertex `i`.
    pub fn incident_edges(&self, v: usize) -> Vec<EdgeMask> {
        let bit = 1u128 << (v - 1);
        self.edges.iter().copied().filter(|&e| e & bit != 0).collect()
    }

    /// Vertices that lie in at least one edge, as a mask.
    pub fn support_mask(&self) -> EdgeMask {
        self.edges.iter().fold(0, |acc, &e| acc | e)
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.support_mask() & (1u128 << (v - 1)) == 0
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.support_mask().count_ones() as usize != self.n
    }

    /// Subgraph induced by a vertex set, relabeled 1..|V'| by increasing
    /// original label. Returns the graph together with the list of original
    /// labels (`old_labels[k-1]` is the original name of new vertex `k`).
    pub fn induced(&self, vertices: &[usize]) -> Result<(Hypergraph, Vec<usize>), GraphError> {
        let mut old: Vec<usize> = vertices.to_vec();
        old.sort_unstable();
        old.dedup();
        for &v in &old {
            if v == 0 || v > self.n {
                return Err(GraphError::BadVertex(v, self.n));
            }
        }
        let keep = mask_of(&old);
        let mut new_of = vec![0usize; self.n + 1];
        for (k, &v) in old.iter().enumerate() {
            new_of[v] = k + 1;
        }
        let mut masks = Vec::new();
        for &e in &self.edges {
            if e & !keep == 0 {
                let mapped: Vec<usize> = mask_vertices(e).iter().map(|&v| new_of[v]).collect();
                masks.push(mask_of(&mapped));
            }
        }
        let g = Hypergraph::from_masks_unchecked(self.r, old.len(), masks);
        Ok((g, old))
    }

    /// Same as [`induced`](Self::induced) but keeps the original labels and
    /// vertex count, dropping edges that leave the set.
    pub fn induced_keep_labels(&self, keep: EdgeMask) -> Hypergraph {
        let masks: Vec<EdgeMask> = self
            .edges
            .iter()
            .copied()
            .filter(|&e| e & !keep == 0)
            .collect();
        Hypergraph {
            r: self.r,
            n: self.n,
            edges: masks,
        }
    }

    /// Link graph `L_G(S)`: the (r-|S|)-graph on the vertices outside `S`
    /// (relabeled) with edges `{ e : e ∪ S ∈ E(G), e ∩ S = ∅ }`.
    /// Returns the relabeled link and the original labels of its vertices.
    ///
    /// Requires `|S| ≤ r - 2` so the result is at least 2-uniform; for
    /// `|S| = r - 1` use [`link_sets`](Self::link_sets), which returns the raw
    /// remainder sets.
    pub fn link(&self, s: &[usize]) -> Result<(Hypergraph, Vec<usize>), GraphError> {
        let mut sv: Vec<usize> = s.to_vec();
        sv.sort_unstable();
        sv.dedup();
        if sv.len() + 2 > self.r {
            return Err(GraphError::LinkSetTooLarge(sv.len(), self.r));
        }
        for &v in &sv {
            if v == 0 || v > self.n {
                return Err(GraphError::BadVertex(v, self.n));
            }
        }
        let smask = mask_of(&sv);
        let rest: Vec<usize> = (1..=self.n).filter(|v| !sv.contains(v)).collect();
        let mut new_of = vec![0usize; self.n + 1];
        for (k, &v) in rest.iter().enumerate() {
            new_of[v] = k + 1;
        }
        let mut masks = Vec::new();
        for &e in &self.edges {
            if e & smask == smask {
                let remainder = e & !smask;
                let mapped: Vec<usize> =
                    mask_vertices(remainder).iter().map(|&v| new_of[v]).collect();
                masks.push(mask_of(&mapped));
            }
        }
        let g = Hypergraph::from_masks_unchecked(self.r - sv.len(), rest.len(), masks);
        Ok((g, rest))
    }

    /// Remainders `e \ S` (as masks in the original labeling) of edges containing `S`.
    pub fn link_sets(&self, s: &[usize]) -> Result<Vec<EdgeMask>, GraphError> {
        let mut sv: Vec<usize> = s.to_vec();
        sv.sort_unstable();
        sv.dedup();
        if sv.len() >= self.r {
            return Err(GraphError::LinkSetTooLarge(sv.len(), self.r));
        }
        for &v in &sv {
            if v == 0 || v > self.n {
                return Err(GraphError::BadVertex(v, self.n));
            }
        }
        let smask = mask_of(&sv);
        let mut out: Vec<EdgeMask> = self
            .edges
            .iter()
            .filter(|&&e| e & smask == smask)
            .map(|&e| e & !smask)
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// `L_G(j \ i)`: all (r-1)-sets f avoiding {i, j} with f ∪ {j} an edge and
    /// f ∪ {i} not an edge. Returned as masks in the original labeling.
    pub fn link_diff(&self, j: usize, i: usize) -> Result<Vec<EdgeMask>, GraphError> {
        if i == j {
            return Err(GraphError::SamePair(i, j));
        }
        for v in [i, j] {
            if v == 0 || v > self.n {
                return Err(GraphError::BadVertex(v, self.n));
            }
        }
        let bi = 1u128 << (i - 1);
        let bj = 1u128 << (j - 1);
        let mut out = Vec::new();
        for &e in &self.edges {
            if e & bj != 0 && e & bi == 0 {
                let f = e & !bj;
                if !self.has_edge_mask(f | bi) {
                    out.push(f);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Compression `π_ij(G)`: every edge f ∪ {j} with f in `L_G(j \ i)` is
    /// replaced by f ∪ {i}. Preserves the edge count.
    pub fn compress(&self, i: usize, j: usize) -> Result<Hypergraph, GraphError> {
        if i == j {
            return Err(GraphError::SamePair(i, j));
        }
        for v in [i, j] {
            if v == 0 || v > self.n {
                return Err(GraphError::BadVertex(v, self.n));
            }
        }
        let bi = 1u128 << (i - 1);
        let bj = 1u128 << (j - 1);
        let mut masks = Vec::with_capacity(self.edges.len());
        for &e in &self.edges {
            if e & bj != 0 && e & bi == 0 && !self.has_edge_mask((e & !bj) | bi) {
                masks.push((e & !bj) | bi);
            } else {
                masks.push(e);
            }
        }
        let out = Hypergraph::from_masks_unchecked(self.r, self.n, masks);
        debug_assert_eq!(out.edge_count(), self.edge_count());
        Ok(out)
    }

    /// True iff some edge contains both i and j.
    pub fn covers_pair(&self, i: usize, j: usize) -> Result<bool, GraphError> {
        if i == j {
            return Err(GraphError::SamePair(i, j));
        }
        for v in [i, j] {
            if v == 0 || v > self.n {
                return Err(GraphError::BadVertex(v, self.n));
            }
        }
        let pair = (1u128 << (i - 1)) | (1u128 << (j - 1));
        Ok(self.edges.iter().any(|&e| e & pair == pair))
    }

    /// True iff every pair of vertices lies in some edge.
    pub fn covers_pairs(&self) -> bool {
        for i in 1..self.n {
            for j in (i + 1)..=self.n {
                let pair = (1u128 << (i - 1)) | (1u128 << (j - 1));
                if !self.edges.iter().any(|&e| e & pair == pair) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff `π_ij(G) = G` for every i before j in the given order
    /// (`order[k]` is the (k+1)-th smallest vertex). Equivalently, every
    /// `L_G(j \ i)` with i earlier than j is empty.
    pub fn is_left_compressed(&self, order: &[usize]) -> Result<bool, GraphError> {
        if order.len() != self.n {
            return Err(GraphError::NotAPermutation(self.n));
        }
        let mut seen = vec![false; self.n + 1];
        for &v in order {
            if v == 0 || v > self.n || seen[v] {
                return Err(GraphError::NotAPermutation(self.n));
            }
            seen[v] = true;
        }
        for a in 0..order.len() {
            for b in (a + 1)..order.len() {
                if !self.link_diff(order[b], order[a])?.is_empty() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `s(G) = Σ_{e∈G} Σ_{i∈e} i`, the termination metric of the compression loop.
    pub fn s_value(&self) -> u64 {
        self.edges
            .iter()
            .map(|&e| mask_vertices(e).iter().map(|&v| v as u64).sum::<u64>())
            .sum()
    }

    /// Deletes vertices lying in no edge and relabels the rest.
    pub fn remove_isolated(&self) -> (Hypergraph, Vec<usize>) {
        let support = mask_vertices(self.support_mask());
        self.induced(&support).expect("support is within range")
    }

    /// Relabels vertices: `perm[v-1]` is the new label of old vertex v.
    pub fn relabel(&self, perm: &[usize]) -> Result<Hypergraph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::NotAPermutation(self.n));
        }
        let mut seen = vec![false; self.n + 1];
        for &v in perm {
            if v == 0 || v > self.n || seen[v] {
                return Err(GraphError::NotAPermutation(self.n));
            }
            seen[v] = true;
        }
        let masks: Vec<EdgeMask> = self
            .edges
            .iter()
            .map(|&e| {
                let mapped: Vec<usize> = mask_vertices(e).iter().map(|&v| perm[v - 1]).collect();
                mask_of(&mapped)
            })
            .collect();
        Ok(Hypergraph::from_masks_unchecked(self.r, self.n, masks))
    }

    /// Blowup: vertex i of `self` is replaced by a class of `part_sizes[i-1]`
    /// fresh vertices (classes are consecutive label ranges in vertex order),
    /// and the edges are all transversals of the original edges.
    pub fn blowup(&self, part_sizes: &[usize]) -> Result<Hypergraph, GraphError> {
        if part_sizes.len() != self.n {
            return Err(GraphError::BadPartition {
                got: part_sizes.len(),
                expected: self.n,
            });
        }
        let total: usize = part_sizes.iter().sum();
        if total > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(total));
        }
        let mut offset = vec![0usize; self.n + 1];
        for v in 1..=self.n {
            offset[v] = offset[v - 1] + part_sizes[v - 1];
        }
        let class = |v: usize| -> Vec<usize> {
            (offset[v - 1] + 1..=offset[v]).collect()
        };
        let mut masks = Vec::new();
        for &e in &self.edges {
            let classes: Vec<Vec<usize>> = mask_vertices(e).iter().map(|&v| class(v)).collect();
            let mut pick = vec![0usize; classes.len()];
            transversals(&classes, 0, &mut pick, &mut masks);
        }
        Ok(Hypergraph::from_masks_unchecked(self.r, total, masks))
    }

    /// Extension `H_p^F` of this graph: the core is `[p]` (the original
    /// vertices plus `p - n` fresh core vertices); each core pair not covered
    /// by an original edge receives r-2 brand-new vertices and one new edge
    /// through the pair, pairwise disjoint over pairs, appended in
    /// lexicographic pair order.
    pub fn extension(&self, p: usize) -> Result<Hypergraph, GraphError> {
        if p < self.n {
            return Err(GraphError::ExtensionTooSmall { p, base: self.n });
        }
        let mut uncovered = Vec::new();
        for i in 1..p {
            for j in (i + 1)..=p {
                let covered = if j <= self.n {
                    self.covers_pair(i, j)?
                } else {
                    false
                };
                if !covered {
                    uncovered.push((i, j));
                }
            }
        }
        let extra = self.r.saturating_sub(2);
        let total = p + extra * uncovered.len();
        if total > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(total));
        }
        let mut masks = self.edges.clone();
        let mut next = p + 1;
        for &(i, j) in &uncovered {
            let mut e = vec![i, j];
            for _ in 0..extra {
                e.push(next);
                next += 1;
            }
            masks.push(mask_of(&e));
        }
        Ok(Hypergraph::from_masks_unchecked(self.r, total, masks))
    }
}

fn transversals(
    classes: &[Vec<usize>],
    depth: usize,
    pick: &mut [usize],
    out: &mut Vec<EdgeMask>,
) {
    if depth == classes.len() {
        out.push(mask_of(pick));
        return;
    }
    for &v in &classes[depth] {
        pick[depth] = v;
        transversals(classes, depth + 1, pick, out);
    }
}
