//! JSON helpers shared by the serialized schemas.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Map keyed by basis pairs `(i, j)`, `i < j`, encoded as `{"i,j": value}`.
///
/// Entries serialize in pair order, not string order, so output is stable
/// and reads naturally (`"0,2"` before `"0,10"`).
#[derive(Clone, Debug, PartialEq)]
pub struct PairMap<T>(pub BTreeMap<(usize, usize), T>);

impl<T> PairMap<T> {
    pub fn new() -> Self {
        PairMap(BTreeMap::new())
    }

    pub fn insert(&mut self, i: usize, j: usize, value: T) {
        self.0.insert((i, j), value);
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&T> {
        self.0.get(&(i, j))
    }

    /// Rejects keys outside `0 <= i < j < dim`.
    pub fn check_keys(&self, dim: usize) -> Result<()> {
        for &(i, j) in self.0.keys() {
            if i >= j || j >= dim {
                return Err(Error::Parse(format!(
                    "pair key \"{i},{j}\" must satisfy i < j < {dim}"
                )));
            }
        }
        Ok(())
    }
}

impl<T> Default for PairMap<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Serialize> Serialize for PairMap<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for ((i, j), v) in &self.0 {
            map.serialize_entry(&format!("{i},{j}"), v)?;
        }
        map.end()
    }
}

impl<'de, T: DeserializeOwned> Deserialize<'de> for PairMap<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, T>::deserialize(deserializer)?;
        let mut out = BTreeMap::new();
        for (k, v) in raw {
            let key = parse_pair(&k).map_err(serde::de::Error::custom)?;
            out.insert(key, v);
        }
        Ok(PairMap(out))
    }
}

fn parse_pair(key: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("bad pair key {key:?}, expected \"i,j\""));
    let (a, b) = key.split_once(',').ok_or_else(bad)?;
    let i = a.trim().parse().map_err(|_| bad())?;
    let j = b.trim().parse().map_err(|_| bad())?;
    Ok((i, j))
}

/// Deterministic pretty JSON with a trailing newline.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_order_is_numeric() {
        let mut m = PairMap::new();
        m.insert(0, 10, 1);
        m.insert(0, 2, 2);
        m.insert(1, 3, 3);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"0,2":2,"0,10":1,"1,3":3}"#);
        let back: PairMap<i32> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn bad_keys() {
        assert!(serde_json::from_str::<PairMap<i32>>(r#"{"01":1}"#).is_err());
        let m: PairMap<i32> = serde_json::from_str(r#"{"2,1":1}"#).unwrap();
        assert!(m.check_keys(4).is_err());
        let m: PairMap<i32> = serde_json::from_str(r#"{"1,4":1}"#).unwrap();
        assert!(m.check_keys(4).is_err());
    }
}
