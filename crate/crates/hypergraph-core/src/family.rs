//! Named constructions and their symbolic descriptors.
//!
//! Every construction is deterministic: realizing the same [`FamilySpec`]
//! twice yields identical labeled graphs.

use crate::error::GraphError;
use crate::hypergraph::Hypergraph;

/// Symbolic descriptor of a named construction.
///
/// Text form (used by the CLI): `K:r:p`, `M:r:t`, `L:r:t`, `T:r:m:n`,
/// `F:t:l:n`, `G:k:n`, and `H:p:<base>` for the extension of a base spec.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Complete r-graph `K_p^r` on p vertices.
    Complete { r: usize, p: usize },
    /// `M_t^r`: t pairwise disjoint edges.
    Matching { r: usize, t: usize },
    /// `L_t^r`: t edges sharing exactly one common vertex (the center, vertex 1).
    LinearStar { r: usize, t: usize },
    /// `T_m^r(n)`: balanced blowup of `K_m^r` on n vertices, smaller parts first.
    TuranBlowup { r: usize, m: usize, n: usize },
    /// `F_{t,l}(n)`: the 2-graph `C([2t-1-l], 2) ∪ {ab : a ≤ l, b ≥ 2t-l}` on `[n]`.
    FFamily { t: usize, l: usize, n: usize },
    /// `G_k(n)` for k in 0..=4: the five maximal left-compressed 3-graphs
    /// with no two disjoint edges.
    GFamily { k: usize, n: usize },
    /// `H_p^F`: extension of the realized base graph with core size p.
    Extension { base: Box<FamilySpec>, p: usize },
}

impl FamilySpec {
    /// Realizes the spec as a labeled hypergraph.
    pub fn construct(&self) -> Result<Hypergraph, GraphError> {
        match self {
            FamilySpec::Complete { r, p } => complete(*r, *p),
            FamilySpec::Matching { r, t } => matching(*r, *t),
            FamilySpec::LinearStar { r, t } => linear_star(*r, *t),
            FamilySpec::TuranBlowup { r, m, n } => turan_blowup(*r, *m, *n),
            FamilySpec::FFamily { t, l, n } => family_f(*t, *l, *n),
            FamilySpec::GFamily { k, n } => family_g(*k, *n),
            FamilySpec::Extension { base, p } => base.construct()?.extension(*p),
        }
    }

    /// Parses the compact colon-separated form.
    pub fn parse(s: &str) -> Result<FamilySpec, GraphError> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |k: usize| -> Result<usize, GraphError> {
            parts
                .get(k)
                .ok_or_else(|| GraphError::Parse(format!("spec `{s}`: missing parameter {k}")))?
                .parse::<usize>()
                .map_err(|_| GraphError::Parse(format!("spec `{s}`: parameter {k} is not a number")))
        };
        match parts[0] {
            "K" => Ok(FamilySpec::Complete { r: num(1)?, p: num(2)? }),
            "M" => Ok(FamilySpec::Matching { r: num(1)?, t: num(2)? }),
            "L" => Ok(FamilySpec::LinearStar { r: num(1)?, t: num(2)? }),
            "T" => Ok(FamilySpec::TuranBlowup { r: num(1)?, m: num(2)?, n: num(3)? }),
            "F" => Ok(FamilySpec::FFamily { t: num(1)?, l: num(2)?, n: num(3)? }),
            "G" => Ok(FamilySpec::GFamily { k: num(1)?, n: num(2)? }),
            "H" => {
                let p = num(1)?;
                let rest = parts[2..].join(":");
                if rest.is_empty() {
                    return Err(GraphError::Parse(format!("spec `{s}`: missing base spec")));
                }
                Ok(FamilySpec::Extension {
                    base: Box::new(FamilySpec::parse(&rest)?),
                    p,
                })
            }
            other => Err(GraphError::Parse(format!("unknown family kind `{other}`"))),
        }
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::Complete { r, p } => write!(f, "K:{r}:{p}"),
            FamilySpec::Matching { r, t } => write!(f, "M:{r}:{t}"),
            FamilySpec::LinearStar { r, t } => write!(f, "L:{r}:{t}"),
            FamilySpec::TuranBlowup { r, m, n } => write!(f, "T:{r}:{m}:{n}"),
            FamilySpec::FFamily { t, l, n } => write!(f, "F:{t}:{l}:{n}"),
            FamilySpec::GFamily { k, n } => write!(f, "G:{k}:{n}"),
            FamilySpec::Extension { base, p } => write!(f, "H:{p}:{base}"),
        }
    }
}

/// `K_p^r`: all r-subsets of `[p]`.
pub fn complete(r: usize, p: usize) -> Result<Hypergraph, GraphError> {
    if r < 2 {
        return Err(GraphError::UniformityTooSmall(r));
    }
    if p < r {
        return Err(GraphError::InvalidFamily(format!(
            "K:{r}:{p} needs at least r = {r} vertices"
        )));
    }
    let mut edges = Vec::new();
    let mut pick = Vec::with_capacity(r);
    subsets(1, p, r, &mut pick, &mut edges);
    Hypergraph::build(r, p, &edges)
}

fn subsets(from: usize, to: usize, k: usize, pick: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if pick.len() == k {
        out.push(pick.clone());
        return;
    }
    for v in from..=to {
        pick.push(v);
        subsets(v + 1, to, k, pick, out);
        pick.pop();
    }
}

/// `M_t^r`: t pairwise disjoint edges on exactly t*r vertices.
pub fn matching(r: usize, t: usize) -> Result<Hypergraph, GraphError> {
    if r < 2 {
        return Err(GraphError::UniformityTooSmall(r));
    }
    if t < 1 {
        return Err(GraphError::InvalidFamily("M needs t >= 1".into()));
    }
    let edges: Vec<Vec<usize>> = (0..t)
        .map(|k| (k * r + 1..=(k + 1) * r).collect())
        .collect();
    Hypergraph::build(r, t * r, &edges)
}

/// `L_t^r`: t edges through the center vertex 1, pairwise disjoint elsewhere.
pub fn linear_star(r: usize, t: usize) -> Result<Hypergraph, GraphError> {
    if r < 2 {
        return Err(GraphError::UniformityTooSmall(r));
    }
    if t < 1 {
        return Err(GraphError::InvalidFamily("L needs t >= 1".into()));
    }
    let n = 1 + t * (r - 1);
    let edges: Vec<Vec<usize>> = (0..t)
        .map(|k| {
            let mut e = vec![1];
            e.extend(k * (r - 1) + 2..=(k + 1) * (r - 1) + 1);
            e
        })
        .collect();
    Hypergraph::build(r, n, &edges)
}

/// Balanced part sizes for `T_m^r(n)`: sizes `⌊n/m⌋` first, then `⌈n/m⌉`.
pub fn balanced_parts(m: usize, n: usize) -> Vec<usize> {
    let q = n / m;
    let rem = n % m;
    let mut sizes = vec![q; m - rem];
    sizes.extend(std::iter::repeat(q + 1).take(rem));
    sizes
}

/// `T_m^r(n)`: balanced blowup of `K_m^r` on n vertices.
pub fn turan_blowup(r: usize, m: usize, n: usize) -> Result<Hypergraph, GraphError> {
    if n < m || m < r {
        return Err(GraphError::InvalidFamily(format!(
            "T:{r}:{m}:{n} needs n >= m >= r"
        )));
    }
    complete(r, m)?.blowup(&balanced_parts(m, n))
}

/// `t_m^r(n) = |T_m^r(n)|`, computed exactly as the r-th elementary symmetric
/// function of the balanced part sizes (no graph is materialized).
pub fn turan_count(r: usize, m: usize, n: usize) -> Result<u128, GraphError> {
    if n < m || m < r || r < 2 {
        return Err(GraphError::InvalidFamily(format!(
            "T:{r}:{m}:{n} needs n >= m >= r >= 2"
        )));
    }
    let sizes = balanced_parts(m, n);
    // coefficient of x^r in prod (1 + s_i x)
    let mut coeff = vec![0u128; r + 1];
    coeff[0] = 1;
    for &s in &sizes {
        for k in (1..=r).rev() {
            coeff[k] += coeff[k - 1] * s as u128;
        }
    }
    Ok(coeff[r])
}

/// `F_{t,l}(n)`: all pairs inside `[2t-1-l]` plus all pairs between `[l]`
/// and `{2t-l, ..., n}`. A 2-graph on `[n]`; valid for `t >= 2`,
/// `l in [t-1] ∪ {0}`, `n >= 2t`.
pub fn family_f(t: usize, l: usize, n: usize) -> Result<Hypergraph, GraphError> {
    if t < 2 || l > t - 1 || n < 2 * t {
        return Err(GraphError::InvalidFamily(format!(
            "F:{t}:{l}:{n} needs t >= 2, l <= t-1, n >= 2t"
        )));
    }
    let head = 2 * t - 1 - l;
    let mut edges = Vec::new();
    for i in 1..head {
        for j in (i + 1)..=head {
            edges.push(vec![i, j]);
        }
    }
    for a in 1..=l {
        for b in (2 * t - l)..=n {
            edges.push(vec![a, b]);
        }
    }
    Hypergraph::build(2, n, &edges)
}

/// `G_k(n)` for k in 0..=4: the five 3-graphs every left-compressed
/// intersecting 3-graph embeds into.
pub fn family_g(k: usize, n: usize) -> Result<Hypergraph, GraphError> {
    if n < 5 {
        return Err(GraphError::InvalidFamily(format!("G:{k}:{n} needs n >= 5")));
    }
    let mut edges: Vec<Vec<usize>> = Vec::new();
    match k {
        0 => {
            for i in 2..n {
                for j in (i + 1)..=n {
                    edges.push(vec![1, i, j]);
                }
            }
        }
        1 => {
            edges.extend((3..=n).map(|i| vec![1, 2, i]));
            for e in [[1, 3, 4], [1, 3, 5], [1, 4, 5], [2, 3, 4], [2, 3, 5], [2, 4, 5]] {
                edges.push(e.to_vec());
            }
        }
        2 => {
            for e in [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]] {
                edges.push(e.to_vec());
            }
            for i in 5..=n {
                edges.push(vec![1, 2, i]);
                edges.push(vec![1, 3, i]);
                edges.push(vec![1, 4, i]);
            }
        }
        3 => {
            edges.extend((3..=n).map(|i| vec![1, 2, i]));
            edges.extend((4..=n).map(|i| vec![1, 3, i]));
            for e in [[2, 3, 4], [2, 3, 5], [1, 4, 5]] {
                edges.push(e.to_vec());
            }
        }
        4 => {
            edges.extend((3..=n).map(|i| vec![1, 2, i]));
            edges.extend((4..=n).map(|i| vec![1, 3, i]));
            edges.extend((4..=n).map(|i| vec![2, 3, i]));
        }
        _ => {
            return Err(GraphError::InvalidFamily(format!(
                "G:{k}:{n}: k must be in 0..=4"
            )))
        }
    }
    Hypergraph::build(3, n, &edges)
}
