//! Shared fixtures and brute-force oracles for the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use artin_core::{alternating_word, ArtinGraph, Letter, Word};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

pub fn graph(text: &str) -> ArtinGraph {
    ArtinGraph::parse(text).unwrap()
}

fn build(vertices: &[&str], edges: &[(&str, &str, u32)]) -> ArtinGraph {
    let mut g = ArtinGraph::default();
    for v in vertices {
        g.add_vertex(v).unwrap();
    }
    for &(u, v, m) in edges {
        g.add_edge(u, v, m).unwrap();
    }
    g
}

pub fn p4() -> ArtinGraph {
    build(&["a", "b", "c", "d"], &[("a", "b", 2), ("b", "c", 2), ("c", "d", 2)])
}

pub fn c4() -> ArtinGraph {
    build(&["a", "b", "c", "d"], &[("a", "b", 2), ("b", "c", 2), ("c", "d", 2), ("d", "a", 2)])
}

/// Label-2 square a-b-c-d-a with chord {b,d} labeled `p`.
pub fn chordal_square(p: u32) -> ArtinGraph {
    build(&["a", "b", "c", "d"], &[("a", "b", 2), ("b", "c", 2), ("c", "d", 2), ("d", "a", 2), ("b", "d", p)])
}

/// Label-2 square with chords {b,d} labeled `p` and {a,c} labeled `q`.
pub fn chordal_square2(p: u32, q: u32) -> ArtinGraph {
    build(
        &["a", "b", "c", "d"],
        &[("a", "b", 2), ("b", "c", 2), ("c", "d", 2), ("d", "a", 2), ("b", "d", p), ("a", "c", q)],
    )
}

/// Path a-b-c with labels `m` on {a,b} and `n` on {b,c}.
pub fn path3(m: u32, n: u32) -> ArtinGraph {
    build(&["a", "b", "c"], &[("a", "b", m), ("b", "c", n)])
}

/// Triangle with labels on {a,b}, {b,c}, {a,c}.
pub fn triangle(ab: u32, bc: u32, ac: u32) -> ArtinGraph {
    build(&["a", "b", "c"], &[("a", "b", ab), ("b", "c", bc), ("a", "c", ac)])
}

pub fn dihedral(m: u32) -> ArtinGraph {
    build(&["a", "b"], &[("a", "b", m)])
}

/// Star with centre `x` and leaves `v1 .. vn`, all labels 2.
pub fn star(n: usize) -> ArtinGraph {
    let mut g = ArtinGraph::default();
    g.add_vertex("x").unwrap();
    for i in 1..=n {
        let leaf = format!("v{i}");
        g.add_vertex(&leaf).unwrap();
        g.add_edge("x", &leaf, 2).unwrap();
    }
    g
}

/// Random graph on up to `max_vertices` vertices. Edge density is drawn
/// uniformly from [0, 1]; each edge label is 2 with probability `p2`,
/// otherwise uniform in {3, 4}.
pub fn random_graph(r: &mut ChaCha8Rng, max_vertices: usize, p2: f64) -> ArtinGraph {
    let n = r.gen_range(0..=max_vertices);
    let density: f64 = r.gen();
    let mut g = ArtinGraph::default();
    for i in 0..n {
        g.add_vertex(&format!("v{i}")).unwrap();
    }
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(density) {
                let m = if r.gen_bool(p2) { 2 } else { r.gen_range(3..=4) };
                g.add_edge_ids(i, j, m).unwrap();
            }
        }
    }
    g
}

pub fn random_word(r: &mut ChaCha8Rng, gens: &[String], max_len: usize) -> Word {
    let len = r.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let name = gens[r.gen_range(0..gens.len())].clone();
            Letter { name, inverse: r.gen_bool(0.5) }
        })
        .collect()
}

fn splice(w: &Word, at: usize, piece: &Word) -> Word {
    let letters = w.letters();
    let mut out = letters[..at].to_vec();
    out.extend_from_slice(piece.letters());
    out.extend_from_slice(&letters[at..]);
    Word::from_letters(out)
}

/// Inserts `g g^-1` (or `g^-1 g`) at a random position.
pub fn insert_free(r: &mut ChaCha8Rng, w: &Word, gens: &[String]) -> Word {
    let g = &gens[r.gen_range(0..gens.len())];
    let piece = if r.gen_bool(0.5) {
        Word::from_letters(vec![Letter::new(g.as_str()), Letter::inv(g.as_str())])
    } else {
        Word::from_letters(vec![Letter::inv(g.as_str()), Letter::new(g.as_str())])
    };
    splice(w, r.gen_range(0..=w.len()), &piece)
}

/// Inserts a random defining relator of `g` (or its inverse) at a random
/// position.
pub fn insert_relator(r: &mut ChaCha8Rng, w: &Word, g: &ArtinGraph) -> Word {
    let edges: Vec<(usize, usize, u32)> = g.edges().collect();
    let (i, j, m) = edges[r.gen_range(0..edges.len())];
    let (u, v) = if r.gen_bool(0.5) { (g.name(i), g.name(j)) } else { (g.name(j), g.name(i)) };
    let lhs = alternating_word(u, v, m as usize).unwrap();
    let rhs = alternating_word(v, u, m as usize).unwrap();
    let mut rel = lhs.concat(&rhs.inverse());
    if r.gen_bool(0.5) {
        rel = rel.inverse();
    }
    splice(w, r.gen_range(0..=w.len()), &rel)
}

/// Brute-force word equality: the closure of a presentation's
/// relator moves over all words up to a fixed length, computed with a
/// union-find. Words identified here are equal in the group; words of
/// short length that are equal in the group are identified whenever some
/// derivation between them stays within the length cap.
pub struct RewritingOracle {
    gens: Vec<String>,
    max_len: usize,
    offsets: Vec<usize>,
    parent: Vec<u32>,
}

impl RewritingOracle {
    /// `relators` are words over `gens`; free cancellation is always added.
    pub fn new(gens: &[&str], relators: &[Word], max_len: usize) -> Self {
        let gens: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
        let k = 2 * gens.len();
        let mut offsets = vec![0usize];
        for len in 0..=max_len {
            offsets.push(offsets[len] + k.pow(len as u32));
        }
        let total = offsets[max_len + 1];
        let mut oracle = RewritingOracle { gens, max_len, offsets, parent: (0..total as u32).collect() };

        // Rules u -> v with u = v in the group and |u| >= |v|; every
        // elementary move has its longer side matching such a rule.
        let mut rules: Vec<(Vec<u8>, Vec<u8>)> = Vec::new();
        for g in 0..oracle.gens.len() as u8 {
            rules.push((vec![2 * g, 2 * g + 1], vec![]));
            rules.push((vec![2 * g + 1, 2 * g], vec![]));
        }
        for rel in relators {
            let enc = oracle.encode(rel);
            for cyc in [enc.clone(), invert(&enc)] {
                let n = cyc.len();
                for shift in 0..n {
                    let rot: Vec<u8> = cyc[shift..].iter().chain(&cyc[..shift]).copied().collect();
                    for split in n.div_ceil(2)..=n {
                        rules.push((rot[..split].to_vec(), invert(&rot[split..])));
                    }
                }
            }
        }
        rules.sort();
        rules.dedup();

        let mut word = Vec::with_capacity(max_len);
        for len in 0..=max_len {
            let count = k.pow(len as u32);
            for idx in 0..count {
                word.clear();
                let mut x = idx;
                for _ in 0..len {
                    word.push((x % k) as u8);
                    x /= k;
                }
                let id = oracle.offsets[len] + idx;
                for (lhs, rhs) in &rules {
                    if lhs.len() > len {
                        continue;
                    }
                    for at in 0..=len - lhs.len() {
                        if word[at..at + lhs.len()] == lhs[..] {
                            let mut other = word[..at].to_vec();
                            other.extend_from_slice(rhs);
                            other.extend_from_slice(&word[at + lhs.len()..]);
                            let oid = oracle.id(&other);
                            oracle.union(id, oid);
                        }
                    }
                }
            }
        }
        oracle
    }

    fn encode(&self, w: &Word) -> Vec<u8> {
        w.letters()
            .iter()
            .map(|l| {
                let g = self.gens.iter().position(|n| *n == l.name).expect("letter in alphabet");
                2 * g as u8 + u8::from(l.inverse)
            })
            .collect()
    }

    fn decode(&self, enc: &[u8]) -> Word {
        enc.iter().map(|&s| Letter { name: self.gens[(s / 2) as usize].clone(), inverse: s % 2 == 1 }).collect()
    }

    fn id(&self, enc: &[u8]) -> usize {
        let k = 2 * self.gens.len();
        let idx = enc.iter().rev().fold(0usize, |acc, &s| acc * k + s as usize);
        self.offsets[enc.len()] + idx
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb) as u32;
        }
    }

    /// Every word of length at most `len`, shortlex by encoding.
    pub fn words_up_to(&self, len: usize) -> Vec<Word> {
        assert!(len <= self.max_len);
        let k = 2 * self.gens.len();
        let mut out = Vec::new();
        for l in 0..=len {
            for idx in 0..k.pow(l as u32) {
                let mut x = idx;
                let enc: Vec<u8> = (0..l)
                    .map(|_| {
                        let s = (x % k) as u8;
                        x /= k;
                        s
                    })
                    .collect();
                out.push(self.decode(&enc));
            }
        }
        out
    }

    /// Class representative of a word within the cap.
    pub fn class(&mut self, w: &Word) -> usize {
        let enc = self.encode(w);
        let id = self.id(&enc);
        self.find(id)
    }
}

fn invert(enc: &[u8]) -> Vec<u8> {
    enc.iter().rev().map(|s| s ^ 1).collect()
}

/// Checks that two labelings of the same list induce the same partition.
/// Returns the first disagreeing pair of indices.
pub fn partition_mismatch<A, B>(left: &[A], right: &[B]) -> Option<(usize, usize)>
where
    A: std::hash::Hash + Eq,
    B: std::hash::Hash + Eq,
{
    let mut by_left: HashMap<&A, usize> = HashMap::new();
    let mut by_right: HashMap<&B, usize> = HashMap::new();
    for i in 0..left.len() {
        let a = *by_left.entry(&left[i]).or_insert(i);
        let b = *by_right.entry(&right[i]).or_insert(i);
        if a != b {
            return Some((a.min(b), i));
        }
    }
    None
}

/// Elements of the numerical semigroup generated by `gens`, up to `max`.
pub fn numerical_semigroup(gens: &[u32], max: u32) -> Vec<bool> {
    let mut reach = vec![false; max as usize + 1];
    reach[0] = true;
    for k in 1..=max as usize {
        reach[k] = gens.iter().any(|&g| g as usize <= k && reach[k - g as usize]);
    }
    reach
}
