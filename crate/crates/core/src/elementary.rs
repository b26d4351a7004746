//! Word problem for Artin groups whose graph has no forbidden pattern.
//!
//! Normal keys follow the decomposition tree. At a direct `Z` node the
//! central generator's exponent sum is split off and the remaining letters
//! are keyed in the child. At a free product node the word is cut into
//! syllables by component; adjacent syllables from one component are
//! merged and trivial syllables dropped until the sequence is reduced,
//! then each syllable is keyed in its factor. Leaves are keyed by exponent
//! sum (`Z`) or by Garside normal form (`D_m`).

use std::collections::HashMap;

use thiserror::Error;

use crate::decompose::{decompose, DecomposeError, DecompositionTree};
use crate::dihedral::DihedralGroup;
use crate::graph::ArtinGraph;
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElementaryError {
    #[error("`{0}` is not a vertex of the graph")]
    UnknownLetter(String),
    #[error("graph is not clean: {0}")]
    NotClean(#[from] DecomposeError),
}

/// A clean Artin graph together with its decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CleanContext {
    graph: ArtinGraph,
    tree: DecompositionTree,
}

impl CleanContext {
    pub fn new(graph: ArtinGraph) -> Result<Self, ElementaryError> {
        let tree = decompose(&graph)?;
        Ok(CleanContext { graph, tree })
    }

    pub fn graph(&self) -> &ArtinGraph {
        &self.graph
    }

    pub fn tree(&self) -> &DecompositionTree {
        &self.tree
    }

    /// Canonical key of the element `w`.
    pub fn normal_key(&self, w: &Word) -> Result<String, ElementaryError> {
        if let Some(l) = w.letters().iter().find(|l| self.graph.index_of(&l.name).is_none()) {
            return Err(ElementaryError::UnknownLetter(l.name.clone()));
        }
        Ok(node_key(&self.tree, w.letters()))
    }

    pub fn equal(&self, u: &Word, v: &Word) -> Result<bool, ElementaryError> {
        Ok(self.normal_key(u)? == self.normal_key(v)?)
    }
}

fn exponent_sum(letters: &[Letter], name: &str) -> i64 {
    letters.iter().filter(|l| l.name == name).map(Letter::exponent).sum()
}

fn node_key(node: &DecompositionTree, letters: &[Letter]) -> String {
    match node {
        DecompositionTree::Trivial => {
            debug_assert!(letters.is_empty());
            "1".to_string()
        }
        DecompositionTree::Z { vertex } => format!("{vertex}^{}", exponent_sum(letters, vertex)),
        DecompositionTree::Dihedral { label, vertices } => {
            let group = DihedralGroup::new(*label, &vertices[0], &vertices[1])
                .expect("dihedral leaves have label > 2 and distinct vertices");
            let nf = group
                .normal_form(&Word::from_letters(letters.to_vec()))
                .expect("letters were routed to this leaf by vertex");
            format!("D{}[{}]", label, nf.render(group.gens()))
        }
        DecompositionTree::DirectZ { vertex, child } => {
            let k = exponent_sum(letters, vertex);
            let rest: Vec<Letter> = letters.iter().filter(|l| &l.name != vertex).cloned().collect();
            format!("{vertex}^{k}×({})", node_key(child, &rest))
        }
        DecompositionTree::FreeProduct { children } => free_product_key(children, letters),
    }
}

struct Syllable {
    factor: usize,
    letters: Vec<Letter>,
    key: String,
}

fn free_product_key(children: &[DecompositionTree], letters: &[Letter]) -> String {
    let mut factor_of: HashMap<&str, usize> = HashMap::new();
    for (i, c) in children.iter().enumerate() {
        for v in c.vertices() {
            factor_of.insert(v, i);
        }
    }
    let identity: Vec<String> = children.iter().map(|c| node_key(c, &[])).collect();

    let mut stack: Vec<Syllable> = Vec::new();
    let mut pos = 0;
    while pos < letters.len() {
        let factor = factor_of[letters[pos].name.as_str()];
        let end =
            letters[pos..].iter().position(|l| factor_of[l.name.as_str()] != factor).map_or(letters.len(), |k| pos + k);
        let mut run = letters[pos..end].to_vec();
        pos = end;
        if let Some(top) = stack.pop_if(|top| top.factor == factor) {
            let mut merged = top.letters;
            merged.append(&mut run);
            run = merged;
        }
        let key = node_key(&children[factor], &run);
        if key != identity[factor] {
            stack.push(Syllable { factor, letters: run, key });
        }
    }
    debug_assert!(stack.windows(2).all(|w| w[0].factor != w[1].factor));
    let parts: Vec<String> = stack.iter().map(|s| format!("{}:{}", s.factor, s.key)).collect();
    format!("*[{}]", parts.join(","))
}

pub fn elementary_equal(ctx: &CleanContext, w1: &Word, w2: &Word) -> Result<bool, ElementaryError> {
    ctx.equal(w1, w2)
}

pub fn normal_key(ctx: &CleanContext, w: &Word) -> Result<String, ElementaryError> {
    ctx.normal_key(w)
}
