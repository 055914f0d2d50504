//! Rooted splice diagrams: linking numbers, multiplicities, the linking matrix of the
//! arrowheads and a reduction certificate for its negative semidefiniteness.

use std::collections::HashMap;

use linkspec_algebra::{int, Inertia, Poly, QMatrix, Rational};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde_json::{json, Value};

use crate::report;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexKind {
    Node,
    Leaf,
    Arrowhead,
}

impl VertexKind {
    fn name(self) -> &'static str {
        match self {
            VertexKind::Node => "node",
            VertexKind::Leaf => "leaf",
            VertexKind::Arrowhead => "arrowhead",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Vertex {
    pub id: String,
    pub kind: VertexKind,
    /// Declared multiplicity, arrowheads only.
    pub multiplicity: Option<i64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub weight_at_a: i64,
    pub weight_at_b: i64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpliceDiagram {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub root: usize,
    parent: Vec<Option<(usize, usize)>>,
    depth: Vec<usize>,
}

fn id_of(v: &Value) -> Result<String, Error> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        _ => Err(Error::Parse(format!("vertex id must be a string or number, got {v}"))),
    }
}

fn weight(e: &Value, key: &str) -> Result<i64, Error> {
    match e.get(key) {
        None | Some(Value::Null) => Ok(1),
        Some(w) => w
            .as_i64()
            .ok_or_else(|| Error::Parse(format!("\"{key}\" must be an integer"))),
    }
}

impl SpliceDiagram {
    /// Validates the tree and fills the parent table.
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>, root: usize) -> Result<SpliceDiagram, Error> {
        let n = vertices.len();
        if root >= n {
            return Err(Error::Parse("root is not a vertex".into()));
        }
        if edges.len() + 1 != n {
            return Err(Error::Parse(format!(
                "a tree on {n} vertices has {} edges, found {}: the edge list has a cycle or is disconnected",
                n.saturating_sub(1),
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for (k, e) in edges.iter().enumerate() {
            if e.a >= n || e.b >= n || e.a == e.b {
                return Err(Error::Parse(format!("edge {k} has an invalid endpoint")));
            }
            adj[e.a].push((e.b, k));
            adj[e.b].push((e.a, k));
        }
        let mut parent = vec![None; n];
        let mut depth = vec![usize::MAX; n];
        depth[root] = 0;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &(w, k) in &adj[v] {
                if parent[v].is_some_and(|(p, _)| p == w) {
                    continue;
                }
                if depth[w] != usize::MAX {
                    return Err(Error::Parse("cycle detected in the edge list".into()));
                }
                depth[w] = depth[v] + 1;
                parent[w] = Some((v, k));
                stack.push(w);
            }
        }
        if depth.contains(&usize::MAX) {
            return Err(Error::Parse("the diagram is not connected".into()));
        }
        for (i, v) in vertices.iter().enumerate() {
            match v.kind {
                VertexKind::Arrowhead => {
                    match v.multiplicity {
                        Some(m) if m > 0 => {}
                        _ => {
                            return Err(Error::Parse(format!(
                                "arrowhead {} needs a positive multiplicity",
                                v.id
                            )))
                        }
                    }
                    if adj[i].len() != 1 || i == root {
                        return Err(Error::Parse(format!("arrowhead {} must be a non-root vertex of valency 1", v.id)));
                    }
                }
                VertexKind::Leaf => {
                    if adj[i].len() != 1 || i == root {
                        return Err(Error::Parse(format!("leaf {} must be a non-root vertex of valency 1", v.id)));
                    }
                }
                VertexKind::Node => {}
            }
        }
        let mut seen = HashMap::new();
        for v in &vertices {
            if seen.insert(v.id.clone(), ()).is_some() {
                return Err(Error::Parse(format!("duplicate vertex id {}", v.id)));
            }
        }
        Ok(SpliceDiagram {
            vertices,
            edges,
            root,
            parent,
            depth,
        })
    }

    pub fn from_json(text: &str) -> Result<SpliceDiagram, Error> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        SpliceDiagram::from_value(&v)
    }

    pub fn from_value(v: &Value) -> Result<SpliceDiagram, Error> {
        let root = id_of(v.get("root").ok_or_else(|| Error::Parse("missing root".into()))?)?;
        let vs = v
            .get("vertices")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"vertices\" array".into()))?;
        let mut vertices = Vec::new();
        for x in vs {
            let id = id_of(x.get("id").ok_or_else(|| Error::Parse("vertex without id".into()))?)?;
            let kind = match x.get("kind").and_then(Value::as_str) {
                Some("node") => VertexKind::Node,
                Some("leaf") => VertexKind::Leaf,
                Some("arrowhead") => VertexKind::Arrowhead,
                other => return Err(Error::Parse(format!("vertex {id}: unknown kind {other:?}"))),
            };
            let multiplicity = match x.get("multiplicity") {
                None | Some(Value::Null) => None,
                Some(m) => Some(
                    m.as_i64()
                        .ok_or_else(|| Error::Parse(format!("vertex {id}: multiplicity must be an integer")))?,
                ),
            };
            vertices.push(Vertex { id, kind, multiplicity });
        }
        let index: HashMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (v.id.as_str(), i)).collect();
        let find = |id: &str| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| Error::Parse(format!("unknown vertex id {id}")))
        };
        let es = v
            .get("edges")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"edges\" array".into()))?;
        let mut edges = Vec::new();
        for e in es {
            let a = find(&id_of(e.get("a").ok_or_else(|| Error::Parse("edge without a".into()))?)?)?;
            let b = find(&id_of(e.get("b").ok_or_else(|| Error::Parse("edge without b".into()))?)?)?;
            edges.push(Edge {
                a,
                b,
                weight_at_a: weight(e, "weight_at_a")?,
                weight_at_b: weight(e, "weight_at_b")?,
            });
        }
        let root = find(&root)?;
        SpliceDiagram::new(vertices, edges, root)
    }

    pub fn to_value(&self) -> Value {
        json!({
            "root": self.vertices[self.root].id,
            "vertices": self.vertices.iter().map(|v| {
                let mut o = json!({"id": v.id, "kind": v.kind.name()});
                if let Some(m) = v.multiplicity {
                    o["multiplicity"] = json!(m);
                }
                o
            }).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|e| json!({
                "a": self.vertices[e.a].id,
                "b": self.vertices[e.b].id,
                "weight_at_a": e.weight_at_a,
                "weight_at_b": e.weight_at_b,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn kind(&self, v: usize) -> VertexKind {
        self.vertices[v].kind
    }

    /// Arrowheads in vertex order.
    pub fn arrowheads(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.kind(v) == VertexKind::Arrowhead).collect()
    }

    pub fn nu(&self) -> usize {
        self.arrowheads().len()
    }

    fn n_of(&self, v: usize) -> i64 {
        self.vertices[v].multiplicity.unwrap_or(0)
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v].map(|(p, _)| p)
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        (0..self.len()).filter(|&w| self.parent(w) == Some(v)).collect()
    }

    fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&k| self.edges[k].a == v || self.edges[k].b == v)
            .collect()
    }

    /// Weight at `v` on edge `k`.
    pub fn weight_at(&self, v: usize, k: usize) -> i64 {
        let e = &self.edges[k];
        if e.a == v {
            e.weight_at_a
        } else {
            e.weight_at_b
        }
    }

    fn set_weight_at(&mut self, v: usize, k: usize, w: i64) {
        let e = &mut self.edges[k];
        if e.a == v {
            e.weight_at_a = w;
        } else {
            e.weight_at_b = w;
        }
    }

    /// Weight at `v` on the edge towards the root.
    pub fn far_weight(&self, v: usize) -> Option<i64> {
        self.parent[v].map(|(_, k)| self.weight_at(v, k))
    }

    /// Weight at the parent of `v` on the edge towards `v`.
    pub fn near_weight_towards(&self, v: usize) -> Option<i64> {
        self.parent[v].map(|(p, k)| self.weight_at(p, k))
    }

    /// `true` when `w ≠ v` lies in the subtree of `v`.
    pub fn is_beyond(&self, w: usize, v: usize) -> bool {
        let mut x = w;
        while let Some(p) = self.parent(x) {
            if p == v {
                return true;
            }
            x = p;
        }
        false
    }

    /// Geodesic from `a` to `b` as a vertex list and the set of edges on it.
    fn geodesic(&self, a: usize, b: usize) -> (Vec<usize>, Vec<usize>) {
        let (mut x, mut y) = (a, b);
        let (mut left, mut right) = (vec![a], vec![b]);
        let (mut le, mut re) = (Vec::new(), Vec::new());
        while x != y {
            if self.depth[x] >= self.depth[y] {
                let (p, k) = self.parent[x].unwrap();
                le.push(k);
                x = p;
                left.push(x);
            } else {
                let (p, k) = self.parent[y].unwrap();
                re.push(k);
                y = p;
                right.push(y);
            }
        }
        right.pop();
        left.extend(right.into_iter().rev());
        le.extend(re);
        (left, le)
    }

    /// Nodes (other than `v`) in the subtree of `v`.
    fn nodes_beyond(&self, v: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&w| self.kind(w) == VertexKind::Node && self.is_beyond(w, v))
            .collect()
    }
}

/// `ℓ(a, b)`: the product, over the vertices of the geodesic (ends included), of
/// the weights at each such vertex on its incident edges off the geodesic.
pub fn path_linking(d: &SpliceDiagram, a: usize, b: usize) -> Rational {
    let (path, on) = d.geodesic(a, b);
    let mut prod = Rational::one();
    for &w in &path {
        for k in d.incident(w) {
            if !on.contains(&k) {
                prod *= int(d.weight_at(w, k));
            }
        }
    }
    prod
}

/// `M_v = Σ_j n_j ℓ(v, L_j)` for every vertex, and `n_i` for arrowheads.
pub fn multiplicities(d: &SpliceDiagram) -> Vec<Rational> {
    let arrows = d.arrowheads();
    (0..d.len())
        .map(|v| {
            if d.kind(v) == VertexKind::Arrowhead {
                int(d.n_of(v))
            } else {
                arrows
                    .iter()
                    .map(|&l| int(d.n_of(l)) * path_linking(d, v, l))
                    .sum()
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinkingData {
    pub arrowheads: Vec<usize>,
    pub n: Vec<i64>,
    /// `lk(L_i, L_j)`, with the diagonal forced by `lk(L_i, Σ n_j L_j) = 0`.
    pub per_component: QMatrix,
    /// `lk(n_i L_i, n_j L_j)`.
    pub weighted: QMatrix,
    /// `l_i = lk(L_i, Σ_{j≠i} n_j L_j)`.
    pub l: Vec<Rational>,
    pub n_prime: Vec<i64>,
    pub multiplicities: Vec<Rational>,
}

impl LinkingData {
    pub fn nu(&self) -> usize {
        self.arrowheads.len()
    }

    /// Number of components of the regular link, `Σ n_i'`.
    pub fn components(&self) -> i64 {
        self.n_prime.iter().sum()
    }

    /// `dim ker = Σ (n_i' − 1)`.
    pub fn boundary_rank(&self) -> i64 {
        self.n_prime.iter().map(|n| n - 1).sum()
    }
}

pub fn linking_data(d: &SpliceDiagram) -> Result<LinkingData, Error> {
    let arrows = d.arrowheads();
    let nu = arrows.len();
    if nu == 0 {
        return Err(Error::Invalid("the diagram has no arrowheads".into()));
    }
    let n: Vec<i64> = arrows.iter().map(|&a| d.n_of(a)).collect();
    let mut per = QMatrix::zeros(nu, nu);
    for i in 0..nu {
        for j in 0..nu {
            if i != j {
                per[(i, j)] = path_linking(d, arrows[i], arrows[j]);
            }
        }
    }
    let mut l = Vec::with_capacity(nu);
    for i in 0..nu {
        let li: Rational = (0..nu).filter(|&j| j != i).map(|j| &per[(i, j)] * int(n[j])).sum();
        per[(i, i)] = -&li / int(n[i]);
        l.push(li);
    }
    let weighted = QMatrix::from_fn(nu, nu, |i, j| &per[(i, j)] * int(n[i] * n[j]));
    let n_prime = n
        .iter()
        .zip(&l)
        .map(|(&ni, li)| {
            if li.is_integer() {
                let li = li.to_integer().to_i64().unwrap_or(0);
                ni.gcd(&li)
            } else {
                1
            }
        })
        .collect();
    Ok(LinkingData {
        arrowheads: arrows,
        n,
        per_component: per,
        weighted,
        l,
        n_prime,
        multiplicities: multiplicities(d),
    })
}

/// `lk(Σ ℓ_i n_i L_i, Σ ℓ_j n_j L_j)` both directly and through `−Σ_{i<j} (ℓ_i−ℓ_j)² lk(n_iL_i, n_jL_j)`.
pub fn quadratic_identity(ld: &LinkingData, ell: &[Rational]) -> (Rational, Rational) {
    let w = &ld.weighted;
    let nu = ld.nu();
    let mut direct = Rational::zero();
    let mut through = Rational::zero();
    for i in 0..nu {
        for j in 0..nu {
            direct += &ell[i] * &w[(i, j)] * &ell[j];
            if i < j {
                let d = &ell[i] - &ell[j];
                through -= &d * &d * &w[(i, j)];
            }
        }
    }
    (direct, through)
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct HypothesisReport {
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub c: Vec<String>,
    /// Vertices of multiplicity exactly zero (a weaker form of (c)).
    pub zero_multiplicity: Vec<String>,
}

impl HypothesisReport {
    pub fn passed(&self) -> bool {
        self.a.is_empty() && self.b.is_empty() && self.c.is_empty()
    }

    pub fn to_value(&self) -> Value {
        json!({
            "a": {"ok": self.a.is_empty(), "witnesses": self.a},
            "b": {"ok": self.b.is_empty(), "witnesses": self.b},
            "c": {"ok": self.c.is_empty(), "witnesses": self.c},
            "zero_multiplicity": self.zero_multiplicity,
        })
    }
}

/// Clause (a): near weights positive, far weights nonzero. Clause (b): a negative
/// far weight at a node forces negative far weights at every node beyond it.
/// Clause (c): all multiplicities positive.
pub fn check_hypotheses(d: &SpliceDiagram) -> HypothesisReport {
    let mut r = HypothesisReport::default();
    for v in 0..d.len() {
        if let Some(w) = d.near_weight_towards(v) {
            if w <= 0 {
                let p = d.parent(v).unwrap();
                r.a.push(format!(
                    "near weight {w} at {} towards {}",
                    d.vertices[p].id, d.vertices[v].id
                ));
            }
        }
        if d.far_weight(v) == Some(0) {
            r.a.push(format!("far weight 0 at {}", d.vertices[v].id));
        }
    }
    for v in 0..d.len() {
        if d.kind(v) != VertexKind::Node || d.far_weight(v).is_none_or(|w| w >= 0) {
            continue;
        }
        for w in d.nodes_beyond(v) {
            if d.far_weight(w).is_some_and(|x| x > 0) {
                r.b.push(format!(
                    "far weight at {} is negative but at {} beyond it is positive",
                    d.vertices[v].id, d.vertices[w].id
                ));
            }
        }
    }
    for (v, m) in multiplicities(d).iter().enumerate() {
        if m.is_negative() {
            r.c.push(format!("multiplicity {} at {}", m, d.vertices[v].id));
        } else if m.is_zero() {
            r.zero_multiplicity.push(d.vertices[v].id.clone());
        }
    }
    if !r.zero_multiplicity.is_empty() {
        r.c.extend(r.zero_multiplicity.iter().map(|id| format!("multiplicity 0 at {id}")));
    }
    r
}

/// Builds a new diagram keeping the vertices in `keep` (in order).
fn rebuild(d: &SpliceDiagram, keep: &[usize], mut vertex: impl FnMut(usize, &mut Vertex)) -> SpliceDiagram {
    let map: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let vertices = keep
        .iter()
        .map(|&v| {
            let mut x = d.vertices[v].clone();
            vertex(v, &mut x);
            x
        })
        .collect();
    let edges = d
        .edges
        .iter()
        .filter_map(|e| {
            Some(Edge {
                a: *map.get(&e.a)?,
                b: *map.get(&e.b)?,
                weight_at_a: e.weight_at_a,
                weight_at_b: e.weight_at_b,
            })
        })
        .collect();
    SpliceDiagram::new(vertices, edges, map[&d.root]).expect("reductions keep a rooted tree")
}

/// Replaces a node supporting a single arrowhead and otherwise only leaves by one
/// arrowhead of multiplicity `n·β`, `β` the product of the leaf weights at the node.
pub fn collapse(d: &SpliceDiagram, node: usize) -> Result<SpliceDiagram, Error> {
    if node == d.root {
        return Err(Error::Invalid("cannot collapse the root".into()));
    }
    if d.kind(node) != VertexKind::Node {
        return Err(Error::Invalid(format!("{} is not a node", d.vertices[node].id)));
    }
    let kids = d.children(node);
    let arrows: Vec<usize> = kids.iter().copied().filter(|&c| d.kind(c) == VertexKind::Arrowhead).collect();
    if arrows.len() != 1 || kids.iter().any(|&c| d.kind(c) == VertexKind::Node) {
        return Err(Error::Invalid(format!(
            "collapse needs a node with exactly one arrowhead and only leaves beyond it, {} does not qualify",
            d.vertices[node].id
        )));
    }
    let arrow = arrows[0];
    let beta: i64 = kids
        .iter()
        .filter(|&&c| c != arrow)
        .map(|&c| d.near_weight_towards(c).unwrap())
        .product();
    let n = d.n_of(arrow) * beta;
    let keep: Vec<usize> = (0..d.len()).filter(|v| !kids.contains(v)).collect();
    let mut out = rebuild(d, &keep, |v, x| {
        if v == node {
            x.id = d.vertices[arrow].id.clone();
            x.kind = VertexKind::Arrowhead;
            x.multiplicity = Some(n);
        }
    });
    let nv = keep.iter().position(|&v| v == node).unwrap();
    let (_, k) = out.parent[nv].unwrap();
    out.set_weight_at(nv, k, 1);
    Ok(out)
}

/// Merges two arrowheads `L_a`, `L_b` at a node with no node beyond it into one of
/// multiplicity `n_b β_a + n_a β_b` on an edge of near weight `β_a β_b`.
pub fn squeeze(d: &SpliceDiagram, node: usize, la: usize, lb: usize) -> Result<SpliceDiagram, Error> {
    if d.kind(node) != VertexKind::Node || !d.nodes_beyond(node).is_empty() {
        return Err(Error::Invalid(format!(
            "squeeze needs a node with no node beyond it, {} does not qualify",
            d.vertices[node].id
        )));
    }
    let ok = |l: usize| d.kind(l) == VertexKind::Arrowhead && d.parent(l) == Some(node);
    if la == lb || !ok(la) || !ok(lb) {
        return Err(Error::Invalid("squeeze needs two distinct arrowheads supported by the node".into()));
    }
    if d.len() < 3 {
        return Err(Error::Invalid("squeeze needs at least three vertices".into()));
    }
    let (ba, bb) = (d.near_weight_towards(la).unwrap(), d.near_weight_towards(lb).unwrap());
    let ns = d.n_of(lb) * ba + d.n_of(la) * bb;
    let keep: Vec<usize> = (0..d.len()).filter(|&v| v != lb).collect();
    let mut out = rebuild(d, &keep, |v, x| {
        if v == la {
            x.id = format!("{}+{}", d.vertices[la].id, d.vertices[lb].id);
            x.multiplicity = Some(ns);
        }
    });
    let nv = keep.iter().position(|&v| v == la).unwrap();
    let (p, k) = out.parent[nv].unwrap();
    out.set_weight_at(p, k, ba * bb);
    Ok(out)
}

/// Replaces a non-root node with only leaves beyond it by a single leaf. No geodesic
/// between other vertices passes through it, so no other linking number changes.
fn prune(d: &SpliceDiagram, node: usize) -> SpliceDiagram {
    let kids = d.children(node);
    let keep: Vec<usize> = (0..d.len()).filter(|v| !kids.contains(v)).collect();
    let mut out = rebuild(d, &keep, |v, x| {
        if v == node {
            x.kind = VertexKind::Leaf;
        }
    });
    let nv = keep.iter().position(|&v| v == node).unwrap();
    let (_, k) = out.parent[nv].unwrap();
    out.set_weight_at(nv, k, 1);
    out
}

#[derive(Clone, Debug, PartialEq)]
pub enum ReductionStep {
    Collapse {
        node: String,
        arrowhead: String,
        beta: i64,
        multiplicity: i64,
    },
    Squeeze {
        node: String,
        a: String,
        b: String,
        n_s: i64,
        beta_s: i64,
        /// `lk(β_a L_a − β_b L_b, β_a L_a − β_b L_b)`, the split-off summand.
        split: Rational,
    },
    Prune {
        node: String,
    },
}

impl ReductionStep {
    pub fn to_value(&self) -> Value {
        match self {
            ReductionStep::Collapse {
                node,
                arrowhead,
                beta,
                multiplicity,
            } => json!({"op": "collapse", "node": node, "arrowhead": arrowhead, "beta": beta, "multiplicity": multiplicity}),
            ReductionStep::Squeeze {
                node,
                a,
                b,
                n_s,
                beta_s,
                split,
            } => json!({"op": "squeeze", "node": node, "a": a, "b": b, "n_s": n_s, "beta_s": beta_s, "split": report::q(split)}),
            ReductionStep::Prune { node } => json!({"op": "prune", "node": node}),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub steps: Vec<ReductionStep>,
    pub terminal: SpliceDiagram,
    /// Self-linking numbers of the terminal arrowheads.
    pub terminal_self_linking: Vec<Rational>,
    pub split_summands: usize,
    /// Inertia predicted by the reduction.
    pub predicted: Inertia,
    /// Inertia of the per-component linking matrix, computed directly.
    pub inertia: Inertia,
    pub negative_semidefinite: bool,
    pub null_dimension: usize,
    /// Set when some multiplicity is zero; only semidefiniteness is checked then.
    pub weak: bool,
}

impl Certificate {
    pub fn to_value(&self) -> Value {
        json!({
            "steps": self.steps.iter().map(ReductionStep::to_value).collect::<Vec<_>>(),
            "terminal": self.terminal.to_value(),
            "terminal_self_linking": self.terminal_self_linking.iter().map(report::q).collect::<Vec<_>>(),
            "split_summands": self.split_summands,
            "predicted_inertia": report::inertia(&self.predicted),
            "inertia": report::inertia(&self.inertia),
            "negative_semidefinite": self.negative_semidefinite,
            "null_dimension": self.null_dimension,
            "weak": self.weak,
        })
    }
}

fn terminal_node(d: &SpliceDiagram) -> Option<usize> {
    // deepest first, so the choice does not depend on vertex numbering accidents
    let mut nodes: Vec<usize> = (0..d.len())
        .filter(|&v| d.kind(v) == VertexKind::Node && d.nodes_beyond(v).is_empty())
        .collect();
    nodes.sort_by_key(|&v| (std::cmp::Reverse(d.depth[v]), v));
    nodes.into_iter().next()
}

/// One reduction move, or `None` when at most two arrowheads remain.
fn reduce_once(d: &SpliceDiagram) -> Result<Option<(ReductionStep, SpliceDiagram)>, Error> {
    if d.nu() <= 2 {
        return Ok(None);
    }
    let v = terminal_node(d).ok_or_else(|| Error::Inconsistent("no node to reduce at".into()))?;
    let arrows: Vec<usize> = d
        .children(v)
        .into_iter()
        .filter(|&c| d.kind(c) == VertexKind::Arrowhead)
        .collect();
    let id = |x: usize| d.vertices[x].id.clone();
    if arrows.len() >= 2 {
        let (a, b) = (arrows[0], arrows[1]);
        let ld = linking_data(d)?;
        let ia = ld.arrowheads.iter().position(|&x| x == a).unwrap();
        let ib = ld.arrowheads.iter().position(|&x| x == b).unwrap();
        let (ba, bb) = (int(d.near_weight_towards(a).unwrap()), int(d.near_weight_towards(b).unwrap()));
        let m = &ld.per_component;
        let split = &ba * &ba * &m[(ia, ia)] + &bb * &bb * &m[(ib, ib)] - int(2) * &ba * &bb * &m[(ia, ib)];
        let out = squeeze(d, v, a, b)?;
        let na = out.index_of(&format!("{}+{}", id(a), id(b))).unwrap();
        let step = ReductionStep::Squeeze {
            node: id(v),
            a: id(a),
            b: id(b),
            n_s: out.n_of(na),
            beta_s: out.near_weight_towards(na).unwrap(),
            split,
        };
        return Ok(Some((step, out)));
    }
    if v == d.root {
        return Err(Error::Inconsistent("reduction reached the root with more than two arrowheads".into()));
    }
    if arrows.len() == 1 {
        let out = collapse(d, v)?;
        let nv = out.index_of(&id(arrows[0])).unwrap();
        let multiplicity = out.n_of(nv);
        let step = ReductionStep::Collapse {
            node: id(v),
            arrowhead: id(arrows[0]),
            beta: multiplicity / d.n_of(arrows[0]),
            multiplicity,
        };
        return Ok(Some((step, out)));
    }
    Ok(Some((ReductionStep::Prune { node: id(v) }, prune(d, v))))
}

/// Certifies that the linking matrix is negative semidefinite with a one-dimensional
/// null space by reducing the diagram, and cross-checks the claim by exact inertia.
pub fn certify(d: &SpliceDiagram) -> Result<Certificate, Error> {
    let hyp = check_hypotheses(d);
    let weak = hyp.a.is_empty() && hyp.b.is_empty() && hyp.c.len() == hyp.zero_multiplicity.len() && !hyp.c.is_empty();
    if !hyp.passed() && !weak {
        let mut all = Vec::new();
        all.extend(hyp.a.iter().map(|w| format!("(a) {w}")));
        all.extend(hyp.b.iter().map(|w| format!("(b) {w}")));
        all.extend(hyp.c.iter().map(|w| format!("(c) {w}")));
        return Err(Error::Hypothesis(all.join("; ")));
    }
    let ld = linking_data(d)?;
    let inertia = ld.per_component.hermitian_inertia()?;
    let nu = ld.nu();
    if weak {
        return Ok(Certificate {
            steps: Vec::new(),
            terminal: d.clone(),
            terminal_self_linking: Vec::new(),
            split_summands: 0,
            predicted: inertia,
            inertia,
            negative_semidefinite: inertia.plus == 0,
            null_dimension: inertia.zero,
            weak,
        });
    }
    let mut steps = Vec::new();
    let mut cur = d.clone();
    while let Some((step, next)) = reduce_once(&cur)? {
        if let ReductionStep::Squeeze { split, .. } = &step {
            if !split.is_negative() {
                return Err(Error::Inconsistent(format!("squeeze split off a non-negative summand {split}")));
            }
        }
        steps.push(step);
        cur = next;
    }
    let tl = linking_data(&cur)?;
    let self_linking: Vec<Rational> = (0..tl.nu()).map(|i| tl.per_component[(i, i)].clone()).collect();
    if tl.nu() == 2 && self_linking.iter().any(|x| !x.is_negative()) {
        return Err(Error::Inconsistent("terminal self-linking is not negative".into()));
    }
    let splits = steps.iter().filter(|s| matches!(s, ReductionStep::Squeeze { .. })).count();
    let predicted = Inertia {
        plus: 0,
        minus: nu - 1,
        zero: 1,
    };
    if predicted != inertia {
        return Err(Error::Inconsistent(format!(
            "reduction predicts inertia {predicted:?} but the matrix has {inertia:?}"
        )));
    }
    Ok(Certificate {
        steps,
        terminal: cur,
        terminal_self_linking: self_linking,
        split_summands: splits,
        predicted,
        inertia,
        negative_semidefinite: true,
        null_dimension: 1,
        weak,
    })
}

/// `Π (t^{n_i'} − 1)/(t − 1)`.
pub fn boundary_char_poly(n_prime: &[i64]) -> Result<Poly, Error> {
    let mut p = Poly::one();
    for &n in n_prime {
        if n < 1 {
            return Err(Error::Invalid(format!("n' = {n} is not positive")));
        }
        p = &p * &Poly::from_ints(&vec![1; n as usize]);
    }
    Ok(p)
}

/// A random diagram with at most `max_vertices` vertices satisfying (a), (b) and (c),
/// found by rejection sampling.
pub fn random_diagram<R: Rng>(rng: &mut R, max_vertices: usize) -> SpliceDiagram {
    loop {
        if let Some(d) = random_candidate(rng, max_vertices) {
            if check_hypotheses(&d).passed() {
                return d;
            }
        }
    }
}

fn random_candidate<R: Rng>(rng: &mut R, max_vertices: usize) -> Option<SpliceDiagram> {
    let n = rng.gen_range(2..=max_vertices.max(2));
    let parent: Vec<usize> = (1..n).map(|i| rng.gen_range(0..i)).collect();
    let mut children = vec![0usize; n];
    for &p in &parent {
        children[p] += 1;
    }
    let mut vertices = Vec::with_capacity(n);
    for (v, &c) in children.iter().enumerate() {
        let (kind, multiplicity) = if v == 0 || c > 0 {
            (VertexKind::Node, None)
        } else if rng.gen_bool(0.6) {
            (VertexKind::Arrowhead, Some(rng.gen_range(1..=4)))
        } else {
            (VertexKind::Leaf, None)
        };
        vertices.push(Vertex {
            id: format!("v{v}"),
            kind,
            multiplicity,
        });
    }
    if !vertices.iter().any(|v| v.kind == VertexKind::Arrowhead) {
        return None;
    }
    // far weights: a negative one forces negatives further out
    let mut negative = vec![false; n];
    let mut edges = Vec::with_capacity(n - 1);
    for (i, &p) in parent.iter().enumerate() {
        let c = i + 1;
        let near = rng.gen_range(1..=4);
        let far = if vertices[c].kind == VertexKind::Node {
            if negative[p] || rng.gen_bool(0.25) {
                negative[c] = true;
                -rng.gen_range(1..=5)
            } else {
                rng.gen_range(1..=5)
            }
        } else {
            1
        };
        edges.push(Edge {
            a: p,
            b: c,
            weight_at_a: near,
            weight_at_b: far,
        });
    }
    SpliceDiagram::new(vertices, edges, 0).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use linkspec_algebra::rat;

    fn briancon() -> SpliceDiagram {
        SpliceDiagram::from_json(include_str!("../fixtures/briancon_diagram.json")).unwrap()
    }

    #[test]
    fn briancon_values() {
        let d = briancon();
        let (l1, l2, v1) = (d.index_of("L1").unwrap(), d.index_of("L2").unwrap(), d.index_of("v1").unwrap());
        assert_eq!(path_linking(&d, l1, l2), int(6));
        assert_eq!(path_linking(&d, v1, l2), int(-6));
        let m = multiplicities(&d);
        let at = |id: &str| m[d.index_of(id).unwrap()].clone();
        assert_eq!([at("v1"), at("v2"), at("leaf1"), at("leaf2")], [int(2), int(3), int(1), int(1)]);
        let ld = linking_data(&d).unwrap();
        assert_eq!(ld.weighted, QMatrix::from_ints(&[&[-24, 24], &[24, -24]]));
        assert_eq!(ld.per_component[(0, 0)], rat(-3, 2));
        assert_eq!(ld.n_prime, vec![2, 1]);
        assert_eq!(ld.components(), 3);
        assert!(check_hypotheses(&d).passed());
        let c = certify(&d).unwrap();
        assert_eq!((c.inertia.plus, c.inertia.minus, c.inertia.zero), (0, 1, 1));
        let v2 = d.index_of("v2").unwrap();
        let col = collapse(&d, v2).unwrap();
        assert_eq!(col.vertices[col.index_of("L2").unwrap()].multiplicity, Some(3));
        assert!(collapse(&d, d.root).is_err());
        assert_eq!(boundary_char_poly(&[2, 1]).unwrap(), Poly::from_ints(&[1, 1]));
        assert_eq!(boundary_char_poly(&[3]).unwrap(), Poly::from_ints(&[1, 1, 1]));
    }

    #[test]
    fn squeeze_formula() {
        let text = r#"{"root": "r", "vertices": [
            {"id": "r", "kind": "node"}, {"id": "v", "kind": "node"},
            {"id": "a", "kind": "arrowhead", "multiplicity": 1},
            {"id": "b", "kind": "arrowhead", "multiplicity": 1},
            {"id": "c", "kind": "arrowhead", "multiplicity": 2}],
            "edges": [{"a": "r", "b": "v", "weight_at_b": 5}, {"a": "r", "b": "c"},
            {"a": "v", "b": "a", "weight_at_a": 2}, {"a": "v", "b": "b", "weight_at_a": 3}]}"#;
        let d = SpliceDiagram::from_json(text).unwrap();
        let v = d.index_of("v").unwrap();
        let s = squeeze(&d, v, d.index_of("a").unwrap(), d.index_of("b").unwrap()).unwrap();
        let ls = s.index_of("a+b").unwrap();
        assert_eq!(s.vertices[ls].multiplicity, Some(5));
        assert_eq!(s.near_weight_towards(ls), Some(6));
        let before = multiplicities(&d);
        let after = multiplicities(&s);
        for id in ["r", "v"] {
            assert_eq!(before[d.index_of(id).unwrap()], after[s.index_of(id).unwrap()]);
        }
    }

    #[test]
    fn parse_errors() {
        let cyc = r#"{"root": "a", "vertices": [{"id": "a", "kind": "node"}, {"id": "b", "kind": "node"},
            {"id": "c", "kind": "node"}], "edges": [{"a": "a", "b": "b"}, {"a": "b", "b": "c"}, {"a": "c", "b": "a"}]}"#;
        assert!(matches!(SpliceDiagram::from_json(cyc), Err(Error::Parse(_))));
        let single = r#"{"root": "r", "vertices": [{"id": "r", "kind": "node"},
            {"id": "L", "kind": "arrowhead", "multiplicity": 5}], "edges": [{"a": "r", "b": "L"}]}"#;
        let d = SpliceDiagram::from_json(single).unwrap();
        assert_eq!(multiplicities(&d)[0], int(5));
        let c = certify(&d).unwrap();
        assert_eq!((c.inertia.minus, c.inertia.zero), (0, 1));
        let bad = single.replace("\"multiplicity\": 5", "\"multiplicity\": 0");
        assert!(SpliceDiagram::from_json(&bad).is_err());
        let no_root = single.replace("\"root\": \"r\"", "\"root\": \"x\"");
        assert!(SpliceDiagram::from_json(&no_root).is_err());
    }
}
