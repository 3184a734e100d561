//! Strategy trees and their JSON document form.
//!
//! ```json
//! {"guess":"trace","children":{"BBBBB":{"guess":"lousy","children":{}}}}
//! ```
//!
//! Children are keyed by pattern text and written in ascending pattern-code
//! order, which makes the document canonical: equal trees serialize to
//! identical bytes.

use std::collections::{BTreeMap, HashMap};

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::feedback::Pattern;
use crate::lexicon::Word;

/// One decision point: the word to play and what to do after each response.
/// The all-Green response ends the game and never has a child.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyNode {
    pub guess: Word,
    pub children: BTreeMap<Pattern, StrategyNode>,
}

impl StrategyNode {
    pub fn leaf(guess: Word) -> Self {
        StrategyNode {
            guess,
            children: BTreeMap::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .children
            .values()
            .map(StrategyNode::node_count)
            .sum::<usize>()
    }

    /// Longest root-to-node path, counted in guesses.
    pub fn depth(&self) -> usize {
        1 + self
            .children
            .values()
            .map(StrategyNode::depth)
            .max()
            .unwrap_or(0)
    }

    /// Visits every node with the (guess, pattern) history leading to it.
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a StrategyNode, &[(&'a Word, Pattern)])) {
        fn go<'a>(
            node: &'a StrategyNode,
            path: &mut Vec<(&'a Word, Pattern)>,
            f: &mut impl FnMut(&'a StrategyNode, &[(&'a Word, Pattern)]),
        ) {
            f(node, path);
            for (pattern, child) in &node.children {
                path.push((&node.guess, *pattern));
                go(child, path, f);
                path.pop();
            }
        }
        go(self, &mut Vec::new(), f);
    }
}

impl Serialize for StrategyNode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Children<'a>(&'a BTreeMap<Pattern, StrategyNode>);

        impl Serialize for Children<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.len()))?;
                for (pattern, child) in self.0 {
                    map.serialize_entry(&pattern.to_string(), child)?;
                }
                map.end()
            }
        }

        let mut s = serializer.serialize_struct("StrategyNode", 2)?;
        s.serialize_field("guess", self.guess.as_str())?;
        s.serialize_field("children", &Children(&self.children))?;
        s.end()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeDoc {
    guess: String,
    children: HashMap<String, NodeDoc>,
}

/// A complete strategy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct StrategyTree {
    pub root: StrategyNode,
}

impl StrategyTree {
    pub fn new(root: StrategyNode) -> Self {
        StrategyTree { root }
    }

    pub fn word_len(&self) -> usize {
        self.root.guess.len()
    }
}

/// Canonical compact JSON for `tree`.
pub fn serialize_tree(tree: &StrategyTree) -> String {
    serde_json::to_string(tree).expect("strategy trees always serialize")
}

/// Parses a tree document, validating every word and pattern key.
pub fn load_tree(document: &str) -> Result<StrategyTree> {
    let doc: NodeDoc =
        serde_json::from_str(document).map_err(|e| Error::MalformedTree(e.to_string()))?;
    let word_len = doc.guess.len();
    Ok(StrategyTree::new(convert(doc, word_len)?))
}

fn convert(doc: NodeDoc, word_len: usize) -> Result<StrategyNode> {
    let guess = Word::new(&doc.guess).map_err(|e| Error::MalformedTree(e.to_string()))?;
    if guess.len() != word_len {
        return Err(Error::MalformedTree(format!(
            "guess {guess:?} has {} letters, expected {word_len}",
            guess.len()
        )));
    }
    let mut children = BTreeMap::new();
    for (key, child) in doc.children {
        let pattern =
            Pattern::parse(&key, word_len).map_err(|e| Error::MalformedTree(e.to_string()))?;
        if pattern.is_all_green() {
            return Err(Error::MalformedTree(format!(
                "all-green child under {guess:?}"
            )));
        }
        children.insert(pattern, convert(child, word_len)?);
    }
    Ok(StrategyNode { guess, children })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::new(s).unwrap()
    }

    fn p(s: &str) -> Pattern {
        Pattern::parse(s, 5).unwrap()
    }

    #[test]
    fn single_node_document() {
        let tree = StrategyTree::new(StrategyNode::leaf(w("crane")));
        assert_eq!(serialize_tree(&tree), r#"{"guess":"crane","children":{}}"#);
    }

    #[test]
    fn children_ordered_by_code_not_text() {
        let mut root = StrategyNode::leaf(w("crane"));
        // text order would be B < G < Y; code order is B < Y < G
        root.children
            .insert(p("GBBBB"), StrategyNode::leaf(w("cloth")));
        root.children
            .insert(p("YBBBB"), StrategyNode::leaf(w("occur")));
        root.children
            .insert(p("BBBBB"), StrategyNode::leaf(w("pilot")));
        let doc = serialize_tree(&StrategyTree::new(root));
        let b = doc.find("BBBBB").unwrap();
        let y = doc.find("YBBBB").unwrap();
        let g = doc.find("GBBBB").unwrap();
        assert!(b < y && y < g, "{doc}");
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let mut inner = StrategyNode::leaf(w("lousy"));
        inner
            .children
            .insert(p("BYBBB"), StrategyNode::leaf(w("cloud")));
        let mut root = StrategyNode::leaf(w("trace"));
        root.children.insert(p("BBBBB"), inner);
        root.children
            .insert(p("GGGGB"), StrategyNode::leaf(w("tracy")));
        let tree = StrategyTree::new(root);
        let doc = serialize_tree(&tree);
        let back = load_tree(&doc).unwrap();
        assert_eq!(back, tree);
        assert_eq!(serialize_tree(&back), doc);
        assert_eq!(tree.root.node_count(), 4);
        assert_eq!(tree.root.depth(), 3);
    }

    #[test]
    fn malformed_documents_rejected() {
        for doc in [
            r#"{"guess":"crane","children":{"GGGGA":{"guess":"cloth","children":{}}}}"#,
            r#"{"guess":"crane","children":{"GGGG":{"guess":"cloth","children":{}}}}"#,
            r#"{"guess":"crane","children":{"GGGGG":{"guess":"cloth","children":{}}}}"#,
            r#"{"guess":"crane","children":{"BBBBB":{"guess":"clot","children":{}}}}"#,
            r#"{"guess":"Crane","children":{}}"#,
            r#"{"guess":"crane"}"#,
            r#"{"guess":"crane","children":{},"extra":1}"#,
            "not json",
        ] {
            assert!(
                matches!(load_tree(doc), Err(Error::MalformedTree(_))),
                "{doc}"
            );
        }
    }
}
