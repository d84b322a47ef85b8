//! Publish-once memo tables shared between grid workers.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

/// A concurrent-read, atomic-insert cache. Entries are immutable once
/// published; if two workers race on the same key the first insert wins and
/// both observe the same `Arc`.
#[derive(Debug)]
pub struct MemoTable<K, V> {
    entries: RwLock<HashMap<K, Arc<V>>>,
}

impl<K, V> Default for MemoTable<K, V> {
    fn default() -> Self {
        Self {
            entries: RwLock::new(HashMap::new()),
        }
    }
}

impl<K: Eq + Hash + Clone, V> MemoTable<K, V> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &K) -> Option<Arc<V>> {
        self.entries
            .read()
            .expect("memo lock poisoned")
            .get(key)
            .cloned()
    }

    /// Returns the cached value for `key`, computing it outside the lock if absent.
    pub fn get_or_insert_with(&self, key: K, compute: impl FnOnce() -> V) -> Arc<V> {
        if let Some(hit) = self.get(&key) {
            return hit;
        }
        let value = Arc::new(compute());
        let mut guard = self.entries.write().expect("memo lock poisoned");
        guard.entry(key).or_insert(value).clone()
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("memo lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.entries.write().expect("memo lock poisoned").clear();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_insert_wins() {
        let table: MemoTable<u32, String> = MemoTable::new();
        let a = table.get_or_insert_with(1, || "one".to_string());
        let b = table.get_or_insert_with(1, || "uno".to_string());
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(*b, "one");
        assert_eq!(table.len(), 1);
    }

    #[test]
    fn concurrent_inserts_publish_one_value() {
        let table: Arc<MemoTable<u32, u64>> = Arc::new(MemoTable::new());
        let handles: Vec<_> = (0..8)
            .map(|i| {
                let t = Arc::clone(&table);
                std::thread::spawn(move || *t.get_or_insert_with(7, || i))
            })
            .collect();
        let seen: Vec<u64> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(seen.iter().all(|v| *v == seen[0]));
    }
}
