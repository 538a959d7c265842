use std::collections::HashMap;
use std::hash::Hash;
use std::sync::RwLock;

/// Insert-if-absent cache shared across threads. Values are computed outside
/// the lock; concurrent writers of one key store equal values.
pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Self {
            map: RwLock::new(HashMap::new()),
        }
    }

    pub(crate) fn get_or_insert_with(&self, key: K, compute: impl FnOnce() -> V) -> V {
        if let Some(v) = self.map.read().expect("memo lock poisoned").get(&key) {
            return v.clone();
        }
        let value = compute();
        self.map
            .write()
            .expect("memo lock poisoned")
            .entry(key)
            .or_insert(value)
            .clone()
    }

    pub(crate) fn len(&self) -> usize {
        self.map.read().expect("memo lock poisoned").len()
    }
}
