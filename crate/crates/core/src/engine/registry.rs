use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Anything that can be registered and looked up by name.
pub trait Named {
    fn name(&self) -> &'static str;
}

/// Name-keyed collection of interchangeable strategies.
pub struct Registry<T: ?Sized + Named> {
    kind: &'static str,
    default: Option<&'static str>,
    entries: BTreeMap<&'static str, Arc<T>>,
}

impl<T: ?Sized + Named> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Registry {
            kind,
            default: None,
            entries: BTreeMap::new(),
        }
    }

    /// Adds a strategy; the first one registered becomes the default.
    pub fn register(&mut self, entry: Arc<T>) {
        let name = entry.name();
        self.default.get_or_insert(name);
        self.entries.insert(name, entry);
    }

    pub fn get(&self, name: &str) -> Result<Arc<T>> {
        self.entries
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnknownStrategy {
                kind: self.kind,
                name: name.to_string(),
                available: self.names().join(", "),
            })
    }

    pub fn default_entry(&self) -> Arc<T> {
        let name = self.default.expect("registry is empty");
        self.entries[name].clone()
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.keys().copied().collect()
    }
}
