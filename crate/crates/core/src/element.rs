//! Universe elements and the shared label table.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Index of one element of a [`Universe`].
///
/// Ordering on ids is the canonical order used for every tie-break.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ElementId(pub usize);

impl ElementId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A set of universe elements; iteration and `Ord` follow the canonical order.
pub type ElementSet = BTreeSet<ElementId>;

/// Ordered list of distinct element labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    labels: Vec<String>,
    index: HashMap<String, ElementId>,
}

impl Universe {
    pub fn new<S: AsRef<str>>(labels: &[S]) -> Result<Self, Error> {
        let mut index = HashMap::with_capacity(labels.len());
        let mut owned = Vec::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            let label = label.as_ref();
            if label.is_empty() {
                return Err(Error::EmptyLabel { position: i });
            }
            if index.insert(label.to_string(), ElementId(i)).is_some() {
                return Err(Error::DuplicateLabel(label.to_string()));
            }
            owned.push(label.to_string());
        }
        Ok(Self {
            labels: owned,
            index,
        })
    }

    /// Universe `"0", "1", .., "n-1"`, the one cyclic and product rings live on.
    pub fn numbered(n: usize) -> Self {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Self::new(&labels).expect("numbered labels are distinct and non-empty")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, id: ElementId) -> &str {
        &self.labels[id.0]
    }

    pub fn id(&self, label: &str) -> Option<ElementId> {
        self.index.get(label).copied()
    }

    /// Resolves a list of labels, failing on the first unknown one.
    pub fn ids<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<ElementId>, Error> {
        labels
            .iter()
            .map(|l| {
                self.id(l.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))
            })
            .collect()
    }

    pub fn contains(&self, id: ElementId) -> bool {
        id.0 < self.labels.len()
    }

    pub fn ids_iter(&self) -> impl Iterator<Item = ElementId> {
        (0..self.labels.len()).map(ElementId)
    }
}
