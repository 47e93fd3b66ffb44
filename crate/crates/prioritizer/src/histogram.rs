//! Position counts per action across outcomes.

use std::collections::BTreeMap;

/// Rows are tags in name order; column `pos j` counts the outcomes that put
/// the tag at position j (1-based). Every outcome assigns each tag exactly
/// one position, so each row sums to the number of outcomes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Histogram {
    tags: Vec<String>,
    counts: BTreeMap<String, Vec<usize>>,
    positions: usize,
}

impl Histogram {
    pub fn new(mut tags: Vec<String>) -> Histogram {
        tags.sort();
        let positions = tags.len();
        let counts = tags
            .iter()
            .map(|t| (t.clone(), vec![0; positions]))
            .collect();
        Histogram {
            tags,
            counts,
            positions,
        }
    }

    pub fn record(&mut self, tag: &str, position: usize) {
        assert!(
            (1..=self.positions).contains(&position),
            "position {position} out of range"
        );
        self.counts.get_mut(tag).expect("known tag")[position - 1] += 1;
    }

    pub fn tags(&self) -> &[String] {
        &self.tags
    }

    pub fn positions(&self) -> usize {
        self.positions
    }

    pub fn row(&self, tag: &str) -> Option<&[usize]> {
        self.counts.get(tag).map(Vec::as_slice)
    }

    /// Mean assigned position of a tag; rows must be non-empty.
    pub fn mean_position(&self, tag: &str) -> Option<f64> {
        let row = self.row(tag)?;
        let total: usize = row.iter().sum();
        if total == 0 {
            return None;
        }
        let weighted: usize = row.iter().enumerate().map(|(i, c)| (i + 1) * c).sum();
        Some(weighted as f64 / total as f64)
    }

    /// `tag,pos1,...,posN` header plus one row per tag, in name order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("tag");
        for j in 1..=self.positions {
            out.push_str(&format!(",pos{j}"));
        }
        out.push('\n');
        for tag in &self.tags {
            out.push_str(tag);
            for count in &self.counts[tag] {
                out.push_str(&format!(",{count}"));
            }
            out.push('\n');
        }
        out
    }
}

/// 64-bit FNV-1a, used to pin fixture output compactly.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in bytes {
        hash ^= u64::from(*byte);
        hash = hash.wrapping_mul(0x100_0000_01b3);
    }
    hash
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_lists_tags_in_name_order() {
        let mut h = Histogram::new(vec!["beta".into(), "alpha".into()]);
        h.record("beta", 1);
        h.record("alpha", 2);
        assert_eq!(h.to_csv(), "tag,pos1,pos2\nalpha,0,1\nbeta,1,0\n");
    }

    #[test]
    fn mean_positions_weight_by_count() {
        let mut h = Histogram::new(vec!["x".into(), "y".into()]);
        h.record("x", 1);
        h.record("x", 2);
        h.record("y", 2);
        assert_eq!(h.mean_position("x"), Some(1.5));
        assert_eq!(h.mean_position("y"), Some(2.0));
        assert_eq!(h.mean_position("z"), None);
    }

    #[test]
    fn fnv_matches_known_vectors() {
        assert_eq!(fnv1a64(b""), 0xcbf2_9ce4_8422_2325);
        assert_eq!(fnv1a64(b"a"), 0xaf63_dc4c_8601_ec8c);
        assert_eq!(fnv1a64(b"foobar"), 0x85944171f73967e8);
    }
}
