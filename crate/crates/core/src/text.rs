use std::fmt::Debug;
use std::ops::Index;

/// An alphabet symbol. Only equality is assumed; ordered components add `Ord`.
pub trait Letter: Copy + Eq + Debug {}

impl<T: Copy + Eq + Debug> Letter for T {}

/// The processed text, indexed from 1 like the position arithmetic that
/// reads it. `text[i]` is valid for `1 <= i <= len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextBuffer<T> {
    letters: Vec<T>,
}

impl<T: Letter> TextBuffer<T> {
    pub fn new() -> Self {
        TextBuffer {
            letters: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, c: T) {
        self.letters.push(c);
    }

    pub fn pop(&mut self) -> Option<T> {
        self.letters.pop()
    }

    pub fn get(&self, i: usize) -> Option<T> {
        i.checked_sub(1).and_then(|k| self.letters.get(k)).copied()
    }

    /// Letters `text[start..=end]` (1-based, inclusive).
    pub fn slice(&self, start: usize, end: usize) -> &[T] {
        &self.letters[start - 1..end]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.letters
    }
}

impl<T: Letter> Default for TextBuffer<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Letter> From<&[T]> for TextBuffer<T> {
    fn from(letters: &[T]) -> Self {
        TextBuffer {
            letters: letters.to_vec(),
        }
    }
}

impl<T: Letter> From<Vec<T>> for TextBuffer<T> {
    fn from(letters: Vec<T>) -> Self {
        TextBuffer { letters }
    }
}

impl<T> Index<usize> for TextBuffer<T> {
    type Output = T;

    #[inline]
    fn index(&self, i: usize) -> &T {
        &self.letters[i - 1]
    }
}
