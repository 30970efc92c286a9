//! Independent oracles shared by the integration and acceptance suites:
//! brute-force graph enumeration and structure checks, mod-p homology,
//! seeded rational points and a Tietze trace replayer.
#![allow(dead_code)]

use artin_kernels::complex::flag_complex;
use artin_kernels::graph::Graph;
use artin_kernels::linalg::{q, q_frac, Q};
use artin_kernels::presentation::{Presentation, TietzeMove};
use artin_kernels::Cocycle;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// Graph on `n` numbered vertices whose edges are the set bits of `mask`
/// over the pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::on_numbered_vertices(n, edges).unwrap()
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Every labeled graph on `n` vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    (0..1u64 << pair_count(n)).map(move |m| from_mask(n, m))
}

pub fn connected_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    labeled_graphs(n).filter(bfs_connected)
}

/// Canonical form: the lexicographically least adjacency bit string over
/// all vertex orders that list vertices by nondecreasing (degree, sorted
/// neighbor degrees).
fn canonical(adj: &[u32]) -> Vec<u32> {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let invariant: Vec<(u32, Vec<u32>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<u32> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| deg[u]).collect();
            nd.sort();
            (deg[v], nd)
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| invariant[a].cmp(&invariant[b]));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match cells.last_mut() {
            Some(c) if invariant[c[0]] == invariant[v] => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best: Option<Vec<u32>> = None;
    let mut perm = Vec::with_capacity(n);
    search(adj, &cells, 0, &mut vec![false; n], &mut perm, &mut best);
    best.unwrap()
}

fn search(adj: &[u32], cells: &[Vec<usize>], cell: usize, used: &mut [bool], perm: &mut Vec<usize>, best: &mut Option<Vec<u32>>) {
    let n = adj.len();
    if perm.len() == n {
        let mut pos = vec![0usize; n];
        for (i, &v) in perm.iter().enumerate() {
            pos[v] = i;
        }
        let form: Vec<u32> = perm
            .iter()
            .map(|&v| (0..n).filter(|&u| adj[v] >> u & 1 == 1).fold(0u32, |m, u| m | 1 << pos[u]))
            .collect();
        if best.as_ref().is_none_or(|b| form < *b) {
            *best = Some(form);
        }
        return;
    }
    let placed_in_cell = perm.len() - cells[..cell].iter().map(Vec::len).sum::<usize>();
    let (next_cell, c) = if placed_in_cell == cells[cell].len() { (cell + 1, &cells[cell + 1]) } else { (cell, &cells[cell]) };
    for &v in c {
        if !used[v] {
            used[v] = true;
            perm.push(v);
            search(adj, cells, next_cell, used, perm, best);
            perm.pop();
            used[v] = false;
        }
    }
}

fn from_adjacency(adj: &[u32]) -> Graph {
    let n = adj.len();
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v))).collect();
    Graph::on_numbered_vertices(n, edges).unwrap()
}

/// One representative of every isomorphism class of graphs on exactly `n`
/// vertices, by vertex augmentation.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    iso_classes(n).iter().map(|a| from_adjacency(a)).collect()
}

fn iso_classes(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut seen = BTreeSet::new();
    for base in iso_classes(n - 1) {
        for nbrs in 0..1u32 << (n - 1) {
            let mut adj = base.clone();
            for (u, m) in adj.iter_mut().enumerate() {
                if nbrs >> u & 1 == 1 {
                    *m |= 1 << (n - 1);
                }
            }
            adj.push(nbrs);
            seen.insert(canonical(&adj));
        }
    }
    seen.into_iter().collect()
}

pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    graphs_up_to_iso(n).into_iter().filter(bfs_connected).collect()
}

/// Unlabeled trees on `n` vertices, by leaf addition.
pub fn trees(n: usize) -> Vec<Graph> {
    fn grow(n: usize) -> BTreeSet<Vec<u32>> {
        if n == 1 {
            return BTreeSet::from([vec![0]]);
        }
        let mut out = BTreeSet::new();
        for t in grow(n - 1) {
            for u in 0..n - 1 {
                let mut adj = t.clone();
                adj[u] |= 1 << (n - 1);
                adj.push(1 << u);
                out.insert(canonical(&adj));
            }
        }
        out
    }
    grow(n).iter().map(|a| from_adjacency(a)).collect()
}

pub fn bfs_connected(g: &Graph) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if g.adjacent(u, v) && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn subset_connected(g: &Graph, w: u64) -> bool {
    if w == 0 {
        return true;
    }
    let start = w.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for v in 0..g.n() {
            if w >> v & 1 == 1 && seen >> v & 1 == 0 && g.adjacent(u, v) {
                seen |= 1 << v;
                stack.push(v);
            }
        }
    }
    seen == w
}

/// Vertex connectivity by brute force: the least `|S|` whose removal
/// disconnects the graph or leaves one vertex.
pub fn brute_connectivity(g: &Graph) -> usize {
    let n = g.n();
    let full = (1u64 << n) - 1;
    let mut best = n - 1;
    for s in 0..full {
        let rest = full & !s;
        let k = s.count_ones() as usize;
        if k < best && rest.count_ones() >= 2 && !subset_connected(g, rest) {
            best = k;
        }
    }
    best
}

/// Disconnected induced subgraphs maximal under inclusion, by brute force.
pub fn brute_maximal_disconnected(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let disconnected: Vec<u64> = (1..1u64 << n).filter(|&w| w.count_ones() >= 2 && !subset_connected(g, w)).collect();
    let mut out: Vec<Vec<usize>> = disconnected
        .iter()
        .filter(|&&w| !disconnected.iter().any(|&x| x != w && x & w == w))
        .map(|&w| (0..n).filter(|&v| w >> v & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// Part sizes of a complete multipartite structure, by trying every set
/// partition into independent sets with all cross pairs adjacent.
pub fn brute_multipartite(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut labels = vec![0usize; n];
    fn rec(g: &Graph, v: usize, blocks: usize, labels: &mut Vec<usize>) -> Option<Vec<usize>> {
        let n = g.n();
        if v == n {
            let ok = (0..n).all(|a| (a + 1..n).all(|b| g.adjacent(a, b) == (labels[a] != labels[b])));
            if !ok {
                return None;
            }
            let mut sizes: Vec<usize> = (0..blocks).map(|c| labels.iter().filter(|&&l| l == c).count()).collect();
            sizes.sort();
            return Some(sizes);
        }
        for c in 0..=blocks {
            labels[v] = c;
            let nb = if c == blocks { blocks + 1 } else { blocks };
            if let Some(s) = rec(g, v + 1, nb, labels) {
                return Some(s);
            }
        }
        None
    }
    rec(g, 0, 0, &mut labels)
}

pub fn brute_is_tree(g: &Graph) -> bool {
    bfs_connected(g) && g.edge_count() + 1 == g.n()
}

/// The (Q3) condition evaluated on brute-force data.
pub fn q3(g: &Graph) -> bool {
    brute_is_tree(g)
        || brute_multipartite(g).is_some_and(|s| s.contains(&1) || (s.len() >= 3 && s.iter().all(|&x| x >= 2)))
}

fn rank_mod_p(mut m: Vec<Vec<i64>>, p: i64) -> usize {
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            *x = x.rem_euclid(p);
        }
    }
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = (1..p).find(|&i| i * m[rank][c] % p == 1).unwrap();
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in 0..cols {
                    m[r][k] = (m[r][k] - f * m[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim H_1(Δ; F_p)` from boundary matrices assembled here from the
/// cliques.
pub fn h1_mod_p(g: &Graph, p: i64) -> usize {
    let c = flag_complex(g);
    let edges = c.edges();
    let tris = c.triangles();
    let d1: Vec<Vec<i64>> = (0..g.n())
        .map(|v| edges.iter().map(|e| if e[0] == v { -1 } else if e[1] == v { 1 } else { 0 }).collect())
        .collect();
    let d2: Vec<Vec<i64>> = edges
        .iter()
        .map(|e| {
            tris.iter()
                .map(|t| {
                    let faces = [[t[1], t[2]], [t[0], t[2]], [t[0], t[1]]];
                    faces.iter().position(|f| f == e).map_or(0, |i| if i == 1 { -1 } else { 1 })
                })
                .collect()
        })
        .collect();
    edges.len() - rank_mod_p(d1, p) - rank_mod_p(d2, p)
}

/// Oracle for simple connectivity on small complexes: connected and
/// `H_1 = 0` over several primes.
pub fn small_simply_connected(g: &Graph) -> bool {
    bfs_connected(g) && [2, 3, 5, 7].iter().all(|&p| h1_mod_p(g, p) == 0)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::on_numbered_vertices(10, edges).unwrap()
}

pub fn bowtie() -> Graph {
    Graph::on_numbered_vertices(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
}

/// The named catalog: trees on ≤ 8 vertices, K_n (n ≤ 6), K̄_n (n ≤ 4),
/// a few complete multipartite graphs, C_4, C_5, the bowtie and Petersen.
pub fn catalog() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=8 {
        for (i, t) in trees(n).into_iter().enumerate() {
            out.push((format!("tree{n}.{i}"), t));
        }
    }
    for n in 1..=6 {
        out.push((format!("K{n}"), Graph::complete(n).unwrap()));
    }
    for n in 1..=4 {
        out.push((format!("Kbar{n}"), Graph::discrete(n).unwrap()));
    }
    for sizes in [&[2, 2][..], &[2, 3], &[1, 2, 2], &[2, 2, 2], &[2, 2, 2, 2]] {
        let name: Vec<String> = sizes.iter().map(usize::to_string).collect();
        out.push((format!("K{{{}}}", name.join(",")), Graph::complete_multipartite(sizes).unwrap()));
    }
    out.push(("C4".into(), Graph::cycle(4).unwrap()));
    out.push(("C5".into(), Graph::cycle(5).unwrap()));
    out.push(("bowtie".into(), bowtie()));
    out.push(("petersen".into(), petersen()));
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_q(rng: &mut impl Rng) -> Q {
    q_frac(rng.gen_range(-7..=7), rng.gen_range(1..=5))
}

fn nonzero_q(rng: &mut impl Rng) -> Q {
    loop {
        let x = random_q(rng);
        if x != q(0) {
            return x;
        }
    }
}

/// Random nonzero point of `C^dim` with entries in `-7/5 ..= 7` supported on
/// a random subset.
pub fn random_support_point(rng: &mut impl Rng, dim: usize) -> Cocycle {
    loop {
        let coords: Vec<Q> = (0..dim).map(|_| if rng.gen_bool(0.5) { nonzero_q(rng) } else { q(0) }).collect();
        if coords.iter().any(|x| *x != q(0)) {
            return Cocycle::new(1, coords);
        }
    }
}

pub fn generic_point(rng: &mut impl Rng, dim: usize) -> Cocycle {
    Cocycle::new(1, (0..dim).map(|_| nonzero_q(rng)).collect())
}

/// Nonzero random combination of `basis`.
pub fn point_in_span(rng: &mut impl Rng, basis: &[Cocycle]) -> Option<Cocycle> {
    let dim = basis.first()?.coords.len();
    for _ in 0..100 {
        let mut x = Cocycle::new(1, vec![q(0); dim]);
        for b in basis {
            x = x.add(&b.scale(&random_q(rng)));
        }
        if !x.is_zero() {
            return Some(x);
        }
    }
    None
}

type W = Vec<(String, bool)>;

fn parse_word(s: &str) -> W {
    s.split_whitespace()
        .map(|t| match t.strip_suffix("^-1") {
            Some(x) => (x.to_string(), true),
            None => (t.to_string(), false),
        })
        .collect()
}

fn reduce(w: W) -> W {
    let mut out: W = Vec::new();
    for l in w {
        if out.last().is_some_and(|m| m.0 == l.0 && m.1 != l.1) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    while out.len() >= 2 && out[0].0 == out[out.len() - 1].0 && out[0].1 != out[out.len() - 1].1 {
        out.remove(0);
        out.pop();
    }
    out
}

fn inverse(w: &W) -> W {
    w.iter().rev().map(|(g, i)| (g.clone(), !i)).collect()
}

fn substitute(w: &W, x: &str, s: &W) -> W {
    let mut out = Vec::new();
    for l in w {
        if l.0 == x {
            out.extend(if l.1 { inverse(s) } else { s.clone() });
        } else {
            out.push(l.clone());
        }
    }
    out
}

/// Replays a Tietze trace on word strings, checking every move, and
/// returns the resulting (generators, relators).
pub fn replay_trace(start: &Presentation, moves: &[TietzeMove]) -> Result<(Vec<String>, BTreeSet<W>), String> {
    let mut gens: Vec<String> = start.generators().to_vec();
    let mut rels: BTreeSet<W> = start
        .relators()
        .iter()
        .map(|r| reduce(parse_word(&start.format_word(r))))
        .filter(|r| !r.is_empty())
        .collect();
    for m in moves {
        let rel = reduce(parse_word(&m.relator));
        if !rels.contains(&rel) {
            return Err(format!("relator {} not present", m.relator));
        }
        if rel.iter().filter(|l| l.0 == m.generator).count() != 1 {
            return Err(format!("{} does not occur exactly once in {}", m.generator, m.relator));
        }
        let subst = parse_word(&m.substitution);
        if subst.iter().any(|l| l.0 == m.generator) {
            return Err("substitution mentions the eliminated generator".into());
        }
        if !reduce(substitute(&rel, &m.generator, &subst)).is_empty() {
            return Err(format!("substitution {} does not solve {}", m.substitution, m.relator));
        }
        rels.remove(&rel);
        rels = rels.iter().map(|r| reduce(substitute(r, &m.generator, &subst))).filter(|r| !r.is_empty()).collect();
        gens.retain(|g| *g != m.generator);
    }
    Ok((gens, rels))
}

pub fn relator_set(p: &Presentation) -> BTreeSet<W> {
    p.relators().iter().map(|r| reduce(parse_word(&p.format_word(r)))).filter(|r| !r.is_empty()).collect()
}
