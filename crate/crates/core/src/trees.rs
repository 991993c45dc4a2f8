//! Increasing ordered trees and forests with fixed child-slot arities, and
//! their bijection with generalized Stirling permutations.
//!
//! A word is turned into a tree by factorizing it around its least letter:
//! `w = w_1 x w_2 x ... x w_m` gives a node `x` whose `m` child slots hold the
//! trees of `w_1, ..., w_m` in order (an empty factor is an external slot).
//! For `t >= 1` the root is the `0` node with `t + 1` slots; for `t = 0` the
//! root is the least label, and an empty word gives the empty tree.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::numerics::binomial;
use crate::params::Params;
use crate::stirlingperm::{enumerate_sequences, is_stirling_word, StirlingSeq, Word};

/// An internal node. `slots[i]` is `None` for an external leaf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub label: u32,
    pub slots: Vec<Option<Node>>,
}

impl Node {
    fn from_word(letters: &[u32]) -> Option<Node> {
        let &least = letters.iter().min()?;
        let slots = letters
            .split(|&x| x == least)
            .map(Node::from_word)
            .collect();
        Some(Node {
            label: least,
            slots,
        })
    }

    fn write_word(&self, out: &mut Vec<u32>) {
        for (i, slot) in self.slots.iter().enumerate() {
            if i > 0 {
                out.push(self.label);
            }
            if let Some(child) = slot {
                child.write_word(out);
            }
        }
    }

    fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Node)) {
        f(self);
        for child in self.slots.iter().flatten() {
            child.visit(f);
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "label": self.label,
            "slots": self.slots.iter().map(|s| s.as_ref().map_or(Value::Null, Node::to_json)).collect::<Vec<_>>(),
        })
    }
}

/// A `(d, t+1)`-ary increasing tree; `d = nu + 1` for trees built from
/// `nu`-Stirling words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncTree {
    pub t: u32,
    pub arity: u32,
    pub root: Option<Node>,
}

impl IncTree {
    /// Labels of all internal nodes other than a `0` root, in preorder.
    pub fn labels(&self) -> Vec<u32> {
        let mut out = Vec::new();
        if let Some(root) = &self.root {
            root.visit(&mut |node| {
                if node.label != 0 {
                    out.push(node.label);
                }
            });
        }
        out
    }

    /// Number of labelled (non-`0`) internal nodes.
    pub fn size(&self) -> usize {
        self.labels().len()
    }

    pub fn edge_count(&self) -> usize {
        let mut edges = 0;
        if let Some(root) = &self.root {
            root.visit(&mut |node| edges += node.slots.len());
        }
        edges
    }

    pub fn external_count(&self) -> usize {
        let Some(root) = &self.root else {
            return 1;
        };
        let mut leaves = 0;
        root.visit(&mut |node| leaves += node.slots.iter().filter(|s| s.is_none()).count());
        leaves
    }

    /// Arity and increasing-label invariants.
    pub fn is_valid(&self) -> bool {
        fn check(node: &Node, arity: usize, parent: Option<u32>) -> bool {
            if node.slots.len() != arity || parent.is_some_and(|p| node.label <= p) {
                return false;
            }
            node.slots
                .iter()
                .flatten()
                .all(|c| check(c, arity, Some(node.label)))
        }
        let arity = self.arity as usize;
        match &self.root {
            None => self.t == 0,
            Some(root) if self.t >= 1 => {
                root.label == 0
                    && root.slots.len() == self.t as usize + 1
                    && root
                        .slots
                        .iter()
                        .flatten()
                        .all(|c| check(c, arity, Some(0)))
            }
            Some(root) => root.label != 0 && check(root, arity, None),
        }
    }

    /// Nested JSON: `{"label": x, "slots": [...]}`, `null` for an external
    /// slot and for the empty tree.
    pub fn to_json(&self) -> Value {
        self.root.as_ref().map_or(Value::Null, Node::to_json)
    }

    /// Graphviz rendering; external slots are drawn as small boxes.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {name} {{");
        self.write_dot_body(&mut out, name);
        out.push_str("}\n");
        out
    }

    fn write_dot_body(&self, out: &mut String, prefix: &str) {
        let Some(root) = &self.root else {
            let _ = writeln!(out, "  {prefix}_empty [label=\"∅\", shape=plaintext];");
            return;
        };
        let mut counter = 0usize;
        fn walk(node: &Node, id: &str, prefix: &str, counter: &mut usize, out: &mut String) {
            let _ = writeln!(out, "  {id} [label=\"{}\", shape=circle];", node.label);
            for (i, slot) in node.slots.iter().enumerate() {
                *counter += 1;
                let child_id = format!("{prefix}_{}", *counter);
                match slot {
                    Some(child) => walk(child, &child_id, prefix, counter, out),
                    None => {
                        let _ = writeln!(
                            out,
                            "  {child_id} [label=\"\", shape=box, width=0.15, height=0.15];"
                        );
                    }
                }
                let _ = writeln!(out, "  {id} -> {child_id} [label=\"{}\"];", i + 1);
            }
        }
        walk(root, &format!("{prefix}_root"), prefix, &mut counter, out);
    }
}

/// Builds the tree of a `(nu, t, X)`-Stirling word, `X` being the word's own
/// non-zero letters.
pub fn perm_to_tree(word: &Word, nu: u32, t: u32) -> Result<IncTree> {
    if nu < 1 || !is_stirling_word(&word.0, nu, t, &word.labels()) {
        return Err(Error::InvalidWord(format!(
            "{:?} is not a ({nu},{t},X)-Stirling permutation",
            word.to_string()
        )));
    }
    let root = if t >= 1 {
        Some(Node {
            label: 0,
            slots: word.0.split(|&x| x == 0).map(Node::from_word).collect(),
        })
    } else {
        Node::from_word(&word.0)
    };
    Ok(IncTree {
        t,
        arity: nu + 1,
        root,
    })
}

/// Reads a tree back into its word: a node `x` with slots `c_1 ... c_d`
/// emits `w(c_1) x w(c_2) x ... x w(c_d)`.
pub fn tree_to_perm(tree: &IncTree) -> Word {
    let mut out = Vec::new();
    if let Some(root) = &tree.root {
        root.write_word(&mut out);
    }
    Word(out)
}

/// Labels of internal nodes sitting in the first slot of their parent.
pub fn leftmost_internal_set(tree: &IncTree) -> BTreeSet<u32> {
    let mut out = BTreeSet::new();
    if let Some(root) = &tree.root {
        root.visit(&mut |node| {
            if let Some(Some(first)) = node.slots.first() {
                out.insert(first.label);
            }
        });
    }
    out
}

/// The pool of markable nodes: the leftmost-child set, plus the root when
/// `t = 0` and the tree is non-empty.
pub fn distinguished_set(tree: &IncTree) -> BTreeSet<u32> {
    let mut out = leftmost_internal_set(tree);
    if tree.t == 0 {
        if let Some(root) = &tree.root {
            out.insert(root.label);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncForest {
    pub nu: u32,
    pub tvec: Vec<u32>,
    pub trees: Vec<IncTree>,
}

impl IncForest {
    pub fn to_json(&self) -> Value {
        Value::Array(self.trees.iter().map(IncTree::to_json).collect())
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph forest {\n");
        for (i, tree) in self.trees.iter().enumerate() {
            let name = format!("T{}", i + 1);
            let _ = writeln!(out, "  subgraph cluster_{name} {{\n  label=\"{name}\";");
            tree.write_dot_body(&mut out, &name);
            out.push_str("  }\n");
        }
        out.push_str("}\n");
        out
    }

    pub fn label_partition(&self) -> Vec<Vec<u32>> {
        self.trees
            .iter()
            .map(|t| {
                let mut l = t.labels();
                l.sort_unstable();
                l
            })
            .collect()
    }
}

pub fn seq_to_forest(seq: &StirlingSeq) -> Result<IncForest> {
    if seq.entries.len() != seq.tvec.len() {
        return Err(Error::InvalidWord(format!(
            "{} entries but composition has {} parts",
            seq.entries.len(),
            seq.tvec.len()
        )));
    }
    let trees = seq
        .entries
        .iter()
        .zip(&seq.tvec)
        .map(|(w, &t)| perm_to_tree(w, seq.nu, t))
        .collect::<Result<_>>()?;
    Ok(IncForest {
        nu: seq.nu,
        tvec: seq.tvec.clone(),
        trees,
    })
}

pub fn forest_to_seq(forest: &IncForest) -> StirlingSeq {
    StirlingSeq {
        nu: forest.nu,
        tvec: forest.tvec.clone(),
        entries: forest.trees.iter().map(tree_to_perm).collect(),
    }
}

pub fn forest_distinguished_set(forest: &IncForest) -> BTreeSet<u32> {
    forest.trees.iter().flat_map(distinguished_set).collect()
}

/// All `k = 0..=n` counts at once: pairs `(F, M)` with `F` a forest built
/// from a `(nu+1, tvec, n)`-Stirling permutation and `M` a subset of its
/// distinguished set with `|M| = n - k`. Here `nu` is the Ward order.
pub fn ward_marked_row(p: &Params, n: u32) -> Result<Vec<BigInt>> {
    let eulerian = Params {
        nu: p.nu + 1,
        ..p.clone()
    };
    let n_i = n as i64;
    // pool size histogram, then binomials
    let mut pools = vec![0u64; n as usize + 1];
    for seq in enumerate_sequences(&eulerian, n)? {
        let forest = seq_to_forest(&seq)?;
        let d = forest_distinguished_set(&forest).len();
        if d > n as usize {
            return Err(Error::InvalidWord(format!(
                "distinguished set larger than n = {n}"
            )));
        }
        pools[d] += 1;
    }
    Ok((0..=n_i)
        .map(|k| {
            pools
                .iter()
                .enumerate()
                .map(|(d, &count)| BigInt::from(count) * binomial(d as i64, n_i - k))
                .sum()
        })
        .collect())
}

pub fn ward_marked_count(p: &Params, n: u32, k: u32) -> Result<BigInt> {
    if k > n {
        return Err(Error::InvalidParams(format!(
            "need 0 <= k <= n, got n={n}, k={k}"
        )));
    }
    Ok(ward_marked_row(p, n)?.swap_remove(k as usize))
}
