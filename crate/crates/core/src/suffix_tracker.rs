//! Online shortest-unioccurrent-suffix lengths via Ukkonen's construction.
//!
//! After a letter is appended, Ukkonen's `remainder` counts the suffixes that
//! are still implicit in the tree, and a suffix of `text[1..n]` is implicit iff
//! it has an earlier occurrence, i.e. occurs in `text[1..n-1]`. The shortest
//! unioccurrent suffix therefore has length `remainder + 1`.

use crate::text::Letter;

const ROOT: u32 = 0;
const OPEN: u32 = u32::MAX;

#[derive(Debug, Clone)]
struct Node<T> {
    // Edge label is text[start..end), 0-based; leaves have `end == OPEN`.
    start: u32,
    end: u32,
    link: u32,
    children: Vec<(T, u32)>,
}

impl<T> Node<T> {
    fn new(start: u32, end: u32) -> Self {
        Node {
            start,
            end,
            link: ROOT,
            children: Vec::new(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuffixTracker<T> {
    text: Vec<T>,
    nodes: Vec<Node<T>>,
    active_node: u32,
    active_edge: usize,
    active_len: usize,
    remainder: usize,
    distinct: usize,
    last: Option<usize>,
    work: u64,
}

impl<T: Letter + Ord> SuffixTracker<T> {
    pub fn new() -> Self {
        SuffixTracker {
            text: Vec::new(),
            nodes: vec![Node::new(0, 0)],
            active_node: ROOT,
            active_edge: 0,
            active_len: 0,
            remainder: 0,
            distinct: 0,
            last: None,
            work: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    /// Distinct letters seen so far.
    pub fn alphabet_size(&self) -> usize {
        self.distinct
    }

    /// The most recent `t_n`; `None` before the first push.
    pub fn last(&self) -> Option<usize> {
        self.last
    }

    pub fn take_work(&mut self) -> u64 {
        std::mem::take(&mut self.work)
    }

    fn child(&mut self, node: u32, c: &T) -> Option<u32> {
        self.work += 1;
        let children = &self.nodes[node as usize].children;
        children
            .binary_search_by(|(k, _)| k.cmp(c))
            .ok()
            .map(|k| children[k].1)
    }

    fn set_child(&mut self, node: u32, c: T, child: u32) {
        let children = &mut self.nodes[node as usize].children;
        match children.binary_search_by(|(k, _)| k.cmp(&c)) {
            Ok(k) => children[k].1 = child,
            Err(k) => children.insert(k, (c, child)),
        }
    }

    fn edge_len(&self, node: u32, pos: usize) -> usize {
        let n = &self.nodes[node as usize];
        let end = if n.end == OPEN {
            pos + 1
        } else {
            n.end as usize
        };
        end - n.start as usize
    }

    fn add_node(&mut self, start: usize, end: u32) -> u32 {
        self.nodes.push(Node::new(start as u32, end));
        (self.nodes.len() - 1) as u32
    }

    /// Appends a letter and returns `t_n`.
    pub fn push(&mut self, c: T) -> usize {
        if self.nodes[ROOT as usize]
            .children
            .binary_search_by(|(k, _)| k.cmp(&c))
            .is_err()
        {
            self.distinct += 1;
        }
        self.text.push(c);
        let pos = self.text.len() - 1;
        self.remainder += 1;
        let mut pending_link: Option<u32> = None;
        while self.remainder > 0 {
            self.work += 1;
            if self.active_len == 0 {
                self.active_edge = pos;
            }
            let edge_letter = self.text[self.active_edge];
            match self.child(self.active_node, &edge_letter) {
                None => {
                    let leaf = self.add_node(pos, OPEN);
                    self.set_child(self.active_node, edge_letter, leaf);
                    if let Some(prev) = pending_link.take() {
                        self.nodes[prev as usize].link = self.active_node;
                    }
                }
                Some(next) => {
                    let len = self.edge_len(next, pos);
                    if self.active_len >= len {
                        self.active_edge += len;
                        self.active_len -= len;
                        self.active_node = next;
                        continue;
                    }
                    let probe = self.nodes[next as usize].start as usize + self.active_len;
                    if self.text[probe] == c {
                        if let Some(prev) = pending_link.take() {
                            self.nodes[prev as usize].link = self.active_node;
                        }
                        self.active_len += 1;
                        break;
                    }
                    let split_start = self.nodes[next as usize].start as usize;
                    let split = self.add_node(split_start, (split_start + self.active_len) as u32);
                    self.set_child(self.active_node, edge_letter, split);
                    let leaf = self.add_node(pos, OPEN);
                    self.set_child(split, c, leaf);
                    self.nodes[next as usize].start += self.active_len as u32;
                    let moved = self.text[probe];
                    self.set_child(split, moved, next);
                    if let Some(prev) = pending_link.replace(split) {
                        self.nodes[prev as usize].link = split;
                    }
                }
            }
            self.remainder -= 1;
            if self.active_node == ROOT && self.active_len > 0 {
                self.active_len -= 1;
                self.active_edge = pos + 1 - self.remainder;
            } else if self.active_node != ROOT {
                self.active_node = self.nodes[self.active_node as usize].link;
            }
        }
        let t = self.remainder + 1;
        self.last = Some(t);
        t
    }
}

impl<T: Letter + Ord> Default for SuffixTracker<T> {
    fn default() -> Self {
        Self::new()
    }
}
