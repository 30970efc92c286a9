//! Finite simple graphs with a fixed total vertex order, the graph
//! mini-language, and the graph-theoretic predicates used by the
//! classification.

use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

/// A finite simple graph whose vertices carry a total order.
///
/// Vertices are addressed by their position `0..n` in the order. The order
/// is fixed at construction; every orientation sign downstream is derived
/// from it.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Vec<bool>>,
    edges: Vec<(usize, usize)>,
}

/// A canonically sorted subset of a graph's vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = vertices.into_iter().collect();
        VertexSet(set.into_iter().collect())
    }

    pub fn from_labels(g: &Graph, labels: &[&str]) -> Result<Self> {
        let idx = labels
            .iter()
            .map(|l| g.index_of(l).ok_or_else(|| Error::UnknownVertex(l.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(VertexSet::new(idx))
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        VertexSet((0..64).filter(|i| mask >> i & 1 == 1).collect())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn labels<'g>(&self, g: &'g Graph) -> Vec<&'g str> {
        self.0.iter().map(|&v| g.label(v)).collect()
    }
}

/// Witness that a graph is complete multipartite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultipartiteParts {
    /// Part sizes, non-decreasing.
    pub sizes: Vec<usize>,
    /// The parts themselves, listed in the same order as `sizes`.
    pub parts: Vec<VertexSet>,
}

impl MultipartiteParts {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleCover {
    pub triangles: Vec<[usize; 3]>,
    pub uncovered_edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from labels (in vertex order) and index pairs.
    pub fn new(
        labels: impl IntoIterator<Item = impl Into<String>>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if l.is_empty() || l.chars().any(|c| c.is_whitespace()) {
                return Err(Error::invalid(format!("bad vertex label `{l}`")));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let n = labels.len();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(format!("#{}", u.max(v))));
            }
            if u == v {
                return Err(Error::Loop(labels[u].clone()));
            }
            if adj[u][v] {
                return Err(Error::DuplicateEdge(labels[u.min(v)].clone(), labels[u.max(v)].clone()));
            }
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Ok(Self::from_adjacency(labels, adj))
    }

    fn from_adjacency(labels: Vec<String>, adj: Vec<Vec<bool>>) -> Self {
        let n = labels.len();
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| adj[u][v])
            .collect();
        Graph { labels, adj, edges }
    }

    /// Builds a graph on vertices `v1 < v2 < ... < vn`.
    pub fn on_numbered_vertices(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("v{i}")), edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::on_numbered_vertices(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn discrete(n: usize) -> Result<Self> {
        Self::on_numbered_vertices(n, [])
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::on_numbered_vertices(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("cycle({n}) needs at least 3 vertices")));
        }
        Self::on_numbered_vertices(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The complete multipartite graph `K_{n_1,...,n_r}`; parts occupy
    /// consecutive runs of the vertex order.
    pub fn complete_multipartite(sizes: &[usize]) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::invalid("part sizes must be positive"));
        }
        let mut part = Vec::new();
        for (p, &s) in sizes.iter().enumerate() {
            part.extend(std::iter::repeat_n(p, s));
        }
        let n = part.len();
        let part = &part;
        Self::on_numbered_vertices(
            n,
            (0..n).flat_map(move |u| (u + 1..n).filter(move |&v| part[u] != part[v]).map(move |v| (u, v))),
        )
    }

    /// The join `a * b`: vertices of `a` then `b`, relabelled `v1..vn`.
    pub fn join(a: &Graph, b: &Graph) -> Result<Self> {
        let na = a.n();
        let n = na + b.n();
        let mut edges: Vec<(usize, usize)> = a.edges.clone();
        edges.extend(b.edges.iter().map(|&(u, v)| (u + na, v + na)));
        edges.extend((0..na).flat_map(|u| (na..n).map(move |v| (u, v))));
        Self::on_numbered_vertices(n, edges)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&w| self.adj[v][w])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet((0..self.n()).collect())
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&vec![true; self.n()])
    }

    fn components_within(&self, alive: &[bool]) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if !alive[s] || seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in 0..n {
                    if alive[w] && self.adj[u][w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Induced subgraph on `w`, keeping the inherited order.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<Graph> {
        if let Some(&bad) = w.vertices().iter().find(|&&v| v >= self.n()) {
            return Err(Error::UnknownVertex(format!("#{bad}")));
        }
        if w.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let labels = w.vertices().iter().map(|&v| self.labels[v].clone()).collect();
        let adj = w
            .vertices()
            .iter()
            .map(|&u| w.vertices().iter().map(|&v| self.adj[u][v]).collect())
            .collect();
        Ok(Self::from_adjacency(labels, adj))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n).map(|u| (0..n).map(|v| u != v && !self.adj[u][v]).collect()).collect();
        Self::from_adjacency(self.labels.clone(), adj)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count() == n * (n - 1) / 2
    }

    /// Vertex connectivity, with `κ(K_n) = n - 1` and `κ = 0` for
    /// disconnected graphs.
    ///
    /// For non-complete graphs this is the minimum, over non-adjacent pairs,
    /// of the number of internally vertex-disjoint paths (Menger), found by
    /// unit-capacity augmenting paths on the vertex-split network.
    pub fn connectivity(&self) -> usize {
        let n = self.n();
        if self.is_complete() {
            return n - 1;
        }
        if !self.is_connected() {
            return 0;
        }
        let mut best = n - 1;
        for s in 0..n {
            for t in s + 1..n {
                if !self.adj[s][t] {
                    best = best.min(self.local_connectivity(s, t, best));
                }
            }
        }
        best
    }

    fn local_connectivity(&self, s: usize, t: usize, cap: usize) -> usize {
        // node v splits into v_in = 2v, v_out = 2v + 1
        let n = self.n();
        let size = 2 * n;
        let mut capacity = vec![vec![0i32; size]; size];
        for v in 0..n {
            capacity[2 * v][2 * v + 1] = if v == s || v == t { n as i32 } else { 1 };
            for w in 0..n {
                if self.adj[v][w] {
                    capacity[2 * v + 1][2 * w] = n as i32;
                }
            }
        }
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        while flow < cap {
            let mut parent = vec![usize::MAX; size];
            parent[source] = source;
            let mut queue = VecDeque::from([source]);
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for w in 0..size {
                    if capacity[u][w] > 0 && parent[w] == usize::MAX {
                        parent[w] = u;
                        queue.push_back(w);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                break;
            }
            let mut v = sink;
            while v != source {
                let u = parent[v];
                capacity[u][v] -= 1;
                capacity[v][u] += 1;
                v = u;
            }
            flow += 1;
        }
        flow
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n() && self.is_connected()
    }

    /// Recognizes complete multipartite graphs: the complement must be a
    /// disjoint union of cliques, whose vertex sets are the parts.
    pub fn multipartite_parts(&self) -> Option<MultipartiteParts> {
        let mut parts = self.complement().components();
        for p in &parts {
            let vs = p.vertices();
            for (i, &u) in vs.iter().enumerate() {
                if vs[i + 1..].iter().any(|&v| self.adj[u][v]) {
                    return None;
                }
            }
        }
        parts.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Some(MultipartiteParts { sizes: parts.iter().map(VertexSet::len).collect(), parts })
    }

    /// Vertex sets of the finest join factorization: the components of the
    /// complement.
    pub fn join_factors(&self) -> Vec<VertexSet> {
        self.complement().components()
    }

    /// The finest join factorization as induced subgraphs.
    pub fn join_decomposition(&self) -> Vec<Graph> {
        self.join_factors()
            .iter()
            .map(|w| self.induced_subgraph(w).expect("factor is a nonempty vertex subset"))
            .collect()
    }

    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let n = self.n();
        let mut out = Vec::new();
        for &(u, v) in &self.edges {
            for w in v + 1..n {
                if self.adj[u][w] && self.adj[v][w] {
                    out.push([u, v, w]);
                }
            }
        }
        out
    }

    pub fn triangle_cover(&self) -> TriangleCover {
        let triangles = self.triangles();
        let uncovered_edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| !(0..self.n()).any(|w| self.adj[u][w] && self.adj[v][w]))
            .collect();
        TriangleCover { triangles, uncovered_edges }
    }

    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64);
        (0..self.n())
            .map(|v| self.neighbors(v).fold(0u64, |m, w| m | 1 << w))
            .collect()
    }

    pub fn summary(&self) -> GraphSummary {
        GraphSummary {
            vertices: self.labels.clone(),
            edges: self.edges.iter().map(|&(u, v)| [self.labels[u].clone(), self.labels[v].clone()]).collect(),
        }
    }

    /// Edge-list document that [`parse_graph`] reads back to the same graph.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("vertices: {}\n", self.labels.join(" "));
        for &(u, v) in &self.edges {
            s.push_str(&format!("{} {}\n", self.labels[u], self.labels[v]));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> =
            self.edges.iter().map(|&(u, v)| format!("{}{}", self.labels[u], self.labels[v])).collect();
        write!(f, "Graph[{}; {}]", self.labels.join(" "), edges.join(" "))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphSummary {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

/// Parses either a constructor expression (`K(n)`, `Kbar(n)`,
/// `Km(n1,...,nr)`, `path(n)`, `cycle(n)`, `join(a,b)`) or an edge-list
/// document (one `u v` per line, optional `vertices: ...` header fixing the
/// order, `#` comments).
pub fn parse_graph(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    if looks_like_expression(trimmed) {
        let mut p = ExprParser { src: trimmed.as_bytes(), pos: 0 };
        let g = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(g)
    } else {
        parse_edge_list(text)
    }
}

fn looks_like_expression(s: &str) -> bool {
    !s.contains('\n')
        && s.find('(').is_some_and(|i| {
            let head = s[..i].trim_end();
            !head.is_empty() && head.chars().all(|c| c.is_ascii_alphabetic())
        })
}

struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { line: 1, message: format!("{message} at column {}", self.pos + 1) }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected constructor name"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.error("expected a number"))
    }

    fn numbers(&mut self) -> Result<Vec<usize>> {
        let mut out = vec![self.number()?];
        while self.peek() == Some(b',') {
            self.eat(b',')?;
            out.push(self.number()?);
        }
        Ok(out)
    }

    fn single(&mut self, name: &str) -> Result<usize> {
        match self.numbers()?.as_slice() {
            [n] => Ok(*n),
            _ => Err(self.error(&format!("{name} takes exactly one argument"))),
        }
    }

    fn expr(&mut self) -> Result<Graph> {
        let name = self.ident()?;
        self.eat(b'(')?;
        let positive = |n: usize, p: &Self| if n == 0 { Err(p.error("size must be positive")) } else { Ok(n) };
        let g = match name.as_str() {
            "K" => Graph::complete(positive(self.single("K")?, self)?)?,
            "Kbar" => Graph::discrete(positive(self.single("Kbar")?, self)?)?,
            "path" => Graph::path(positive(self.single("path")?, self)?)?,
            "cycle" => Graph::cycle(self.single("cycle")?)?,
            "Km" => Graph::complete_multipartite(&self.numbers()?)?,
            "join" => {
                let a = self.expr()?;
                self.eat(b',')?;
                let b = self.expr()?;
                Graph::join(&a, &b)?
            }
            _ => return Err(Error::UnknownConstructor(name)),
        };
        self.eat(b')')?;
        Ok(g)
    }
}

fn parse_edge_list(doc: &str) -> Result<Graph> {
    let mut order: Option<Vec<String>> = None;
    let mut edges: Vec<(usize, String, String)> = Vec::new();
    for (i, raw) in doc.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices:") {
            if order.is_some() || !edges.is_empty() {
                return Err(Error::Parse { line: line_no, message: "vertex header must come first".into() });
            }
            order = Some(rest.split_whitespace().map(str::to_string).collect());
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [u, v] => edges.push((line_no, u.to_string(), v.to_string())),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected `u v`, found `{line}`"),
                })
            }
        }
    }
    let labels = match order {
        Some(labels) => labels,
        None => {
            let set: BTreeSet<&str> = edges.iter().flat_map(|(_, u, v)| [u.as_str(), v.as_str()]).collect();
            set.into_iter().map(str::to_string).collect()
        }
    };
    let mut index = BTreeMap::new();
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateVertex(l.clone()));
        }
    }
    let lookup = |l: &str| index.get(l).copied().ok_or_else(|| Error::UnknownVertex(l.to_string()));
    let pairs = edges
        .iter()
        .map(|(_, u, v)| Ok((lookup(u)?, lookup(v)?)))
        .collect::<Result<Vec<_>>>()?;
    Graph::new(labels, pairs)
}
