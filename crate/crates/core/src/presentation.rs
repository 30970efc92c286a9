//! Finite group presentations: the right-angled Artin presentation, the
//! Dicks–Leary presentation of the Bestvina–Brady kernel, abelianization, and
//! deterministic Tietze simplification.

use crate::complex::{simple_connectivity, ConnectivityVerdict};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::IntMatrix;
use num::ToPrimitive;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize) -> Self {
        Letter { generator, inverse: false }
    }

    pub fn inv(self) -> Self {
        Letter { inverse: !self.inverse, ..self }
    }

    fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

pub type Word = Vec<Letter>;

pub fn free_reduce(word: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free reduction followed by cancelling inverse pairs across the ends.
pub fn cyclic_reduce(word: &[Letter]) -> Word {
    let w = free_reduce(word);
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == w[hi - 1].inv() {
        lo += 1;
        hi -= 1;
    }
    w[lo..hi].to_vec()
}

pub fn invert(word: &[Letter]) -> Word {
    word.iter().rev().map(|l| l.inv()).collect()
}

/// `⟨generators | relators⟩`, relators stored freely reduced.
#[derive(Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            if let Some(l) = r.iter().find(|l| l.generator >= generators.len()) {
                return Err(Error::invalid(format!("relator uses undeclared generator #{}", l.generator)));
            }
        }
        let relators = relators.iter().map(|r| free_reduce(r)).collect();
        Ok(Presentation { generators, relators })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn is_free(&self) -> bool {
        self.relators.iter().all(Vec::is_empty)
    }

    pub fn relator_length(&self) -> usize {
        self.relators.iter().map(Vec::len).sum()
    }

    pub fn format_word(&self, word: &[Letter]) -> String {
        word.iter()
            .map(|l| {
                let g = &self.generators[l.generator];
                if l.inverse {
                    format!("{g}^-1")
                } else {
                    g.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Exponent-sum matrix, one row per relator.
    pub fn exponent_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.relators.len(), self.generators.len());
        for (i, r) in self.relators.iter().enumerate() {
            for l in r {
                m.add_to(i, l.generator, l.exponent());
            }
        }
        m
    }

    pub fn report(&self) -> PresentationReport {
        PresentationReport {
            generators: self.generators.clone(),
            relators: self.relators.iter().map(|r| self.format_word(r)).collect(),
            abelianization: abelianization(self),
        }
    }
}

impl fmt::Display for Presentation {
    /// One line of generators, then one relator per line in `a b a^-1 b^-1`
    /// syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.generators.join(" "))?;
        for r in &self.relators {
            writeln!(f, "{}", self.format_word(r))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "<{} | {}>", self.generators.join(", "), rels.join(", "))
    }
}

impl FromStr for Presentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines();
        let generators: Vec<String> =
            lines.next().unwrap_or("").split_whitespace().map(str::to_string).collect();
        let mut relators = Vec::new();
        for (i, line) in lines.enumerate() {
            let word = line
                .split_whitespace()
                .map(|tok| {
                    let (name, inverse) = match tok.strip_suffix("^-1") {
                        Some(name) => (name, true),
                        None => (tok, false),
                    };
                    let generator = generators.iter().position(|g| g == name).ok_or_else(|| Error::Parse {
                        line: i + 2,
                        message: format!("undeclared generator `{name}`"),
                    })?;
                    Ok(Letter { generator, inverse })
                })
                .collect::<Result<Word>>()?;
            relators.push(word);
        }
        Presentation::new(generators, relators)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationReport {
    pub generators: Vec<String>,
    pub relators: Vec<String>,
    pub abelianization: Abelianization,
}

fn commutator(a: usize, b: usize) -> Word {
    vec![Letter::new(a), Letter::new(b), Letter::new(a).inv(), Letter::new(b).inv()]
}

/// Generators are the vertices; one commutator `v w v^-1 w^-1` per edge
/// `v < w`.
pub fn raag_presentation(g: &Graph) -> Presentation {
    let relators = g.edges().iter().map(|&(v, w)| commutator(v, w)).collect();
    Presentation { generators: g.labels().to_vec(), relators }
}

/// Name of the edge generator `{u, v}`, `u < v`.
pub fn edge_generator_name(g: &Graph, u: usize, v: usize) -> String {
    format!("{}.{}", g.label(u.min(v)), g.label(u.max(v)))
}

/// The Dicks–Leary presentation, built without checking that the flag
/// complex is simply connected.
///
/// Generators are the edges, oriented increasingly. Each directed triangle
/// `u < v < w` with `e = uv`, `f = vw`, `g = uw` contributes `e f e^-1 f^-1`
/// and `e f g^-1`.
pub fn dicks_leary_uncertified(g: &Graph) -> Presentation {
    let generators = g.edges().iter().map(|&(u, v)| edge_generator_name(g, u, v)).collect();
    let mut relators = Vec::new();
    for [u, v, w] in g.triangles() {
        let e = g.edge_index(u, v).expect("triangle edge");
        let f = g.edge_index(v, w).expect("triangle edge");
        let h = g.edge_index(u, w).expect("triangle edge");
        relators.push(commutator(e, f));
        relators.push(vec![Letter::new(e), Letter::new(f), Letter::new(h).inv()]);
    }
    Presentation { generators, relators }
}

/// The Dicks–Leary presentation of `N_Γ`, emitted only when the graph is
/// connected and its flag complex is certified simply connected.
pub fn dicks_leary(g: &Graph) -> Result<Presentation> {
    if !g.is_connected() {
        return Err(Error::refused("graph is disconnected; the kernel is not finitely generated"));
    }
    match simple_connectivity(g) {
        ConnectivityVerdict::Yes(_) => Ok(dicks_leary_uncertified(g)),
        ConnectivityVerdict::No(c) => Err(Error::refused(format!(
            "flag complex is not simply connected ({}); the presentation would not be faithful",
            c.describe()
        ))),
        ConnectivityVerdict::Unknown { reason } => Err(Error::refused(format!(
            "simple connectivity of the flag complex is undecided ({reason})"
        ))),
    }
}

/// Rank and torsion coefficients of `G/[G,G]`.
pub fn abelianization(p: &Presentation) -> Abelianization {
    let m = p.exponent_matrix();
    let factors = m.invariant_factors();
    Abelianization {
        rank: p.generators.len() - factors.len(),
        torsion: factors
            .iter()
            .filter_map(|d| d.to_u64())
            .filter(|&d| d > 1)
            .collect(),
    }
}

/// One generator elimination: `generator` was removed using `relator`, and
/// every other occurrence replaced by `substitution`. Words are rendered
/// against the presentation in force when the move was made.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TietzeMove {
    pub generator: String,
    pub relator: String,
    pub substitution: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthPolicy {
    /// Accept a move only if generators plus total relator length do not grow.
    NonIncreasing,
    /// Accept any elimination while total relator length stays under the cap.
    Capped(usize),
}

/// Tietze simplification with a move budget and a non-increasing size.
///
/// Each move eliminates a generator occurring exactly once in some relator;
/// between moves relators are cyclically reduced and trivial or repeated
/// relators dropped.
pub fn simplify(p: &Presentation, budget: usize) -> Presentation {
    simplify_traced(p, budget, GrowthPolicy::NonIncreasing).0
}

/// Same as [`simplify`], returning the eliminations performed.
pub fn simplify_traced(p: &Presentation, budget: usize, policy: GrowthPolicy) -> (Presentation, Vec<TietzeMove>) {
    let mut cur = p.clone();
    let mut moves = Vec::new();
    if budget == 0 {
        return (cur, moves);
    }
    loop {
        tidy(&mut cur);
        if moves.len() >= budget {
            break;
        }
        let Some(c) = best_candidate(&cur, policy) else { break };
        moves.push(apply_elimination(&mut cur, &c));
    }
    (cur, moves)
}

fn tidy(p: &mut Presentation) {
    let mut kept: Vec<Word> = Vec::new();
    for r in &p.relators {
        let r = cyclic_reduce(r);
        if r.is_empty() || kept.contains(&r) {
            continue;
        }
        kept.push(r);
    }
    p.relators = kept;
}

struct Candidate {
    relator: usize,
    position: usize,
    growth: i64,
}

fn best_candidate(p: &Presentation, policy: GrowthPolicy) -> Option<Candidate> {
    let mut occurrences = vec![0usize; p.generators.len()];
    for r in &p.relators {
        for l in r {
            occurrences[l.generator] += 1;
        }
    }
    let total = p.relator_length() as i64;
    let mut best: Option<Candidate> = None;
    for (ri, r) in p.relators.iter().enumerate() {
        for (pos, l) in r.iter().enumerate() {
            if r.iter().filter(|m| m.generator == l.generator).count() != 1 {
                continue;
            }
            let elsewhere = (occurrences[l.generator] - 1) as i64;
            let len = r.len() as i64;
            // delta in (generators + relator length)
            let growth = elsewhere * (len - 2) - len - 1;
            let acceptable = match policy {
                GrowthPolicy::NonIncreasing => growth <= 0,
                GrowthPolicy::Capped(cap) => total + growth < cap as i64,
            };
            if acceptable && best.as_ref().is_none_or(|b| growth < b.growth) {
                best = Some(Candidate { relator: ri, position: pos, growth });
            }
        }
    }
    best
}

fn apply_elimination(p: &mut Presentation, c: &Candidate) -> TietzeMove {
    let r = p.relators[c.relator].clone();
    let x = r[c.position];
    let before = &r[..c.position];
    let after = &r[c.position + 1..];
    // r = A x B = 1 gives x = A^-1 B^-1; r = A x^-1 B = 1 gives x = B A
    let subst: Word = if x.inverse {
        after.iter().chain(before).copied().collect()
    } else {
        invert(before).into_iter().chain(invert(after)).collect()
    };
    let subst = free_reduce(&subst);
    let record = TietzeMove {
        generator: p.generators[x.generator].clone(),
        relator: p.format_word(&r),
        substitution: p.format_word(&subst),
    };
    let g = x.generator;
    let relators: Vec<Word> = p
        .relators
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != c.relator)
        .map(|(_, w)| {
            let mut out = Vec::with_capacity(w.len());
            for &l in w {
                if l.generator == g {
                    if l.inverse {
                        out.extend(invert(&subst));
                    } else {
                        out.extend(subst.iter().copied());
                    }
                } else {
                    out.push(l);
                }
            }
            let out: Word = out
                .into_iter()
                .map(|l| Letter { generator: if l.generator > g { l.generator - 1 } else { l.generator }, ..l })
                .collect();
            free_reduce(&out)
        })
        .collect();
    p.generators.remove(g);
    p.relators = relators;
    record
}
