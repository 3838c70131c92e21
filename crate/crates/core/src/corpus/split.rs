//! Seed-deterministic train/validation/test splitting.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::corpus::NewsRecord;
use crate::error::{Error, Result};

/// Splits records into disjoint, exhaustive (train, validation, test) parts.
/// Deterministic for a given seed; each part preserves input order.
pub fn split_corpus(
    records: Vec<NewsRecord>,
    test_size: usize,
    val_size: usize,
    seed: u64,
) -> Result<(Vec<NewsRecord>, Vec<NewsRecord>, Vec<NewsRecord>)> {
    if test_size + val_size > records.len() {
        return Err(Error::SplitTooLarge {
            test: test_size,
            validation: val_size,
            available: records.len(),
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut indices: Vec<usize> = (0..records.len()).collect();
    indices.shuffle(&mut rng);

    #[derive(Clone, Copy, PartialEq)]
    enum Part {
        Train,
        Val,
        Test,
    }
    let mut assignment = vec![Part::Train; records.len()];
    for &i in &indices[..test_size] {
        assignment[i] = Part::Test;
    }
    for &i in &indices[test_size..test_size + val_size] {
        assignment[i] = Part::Val;
    }

    let mut train = Vec::with_capacity(records.len() - test_size - val_size);
    let mut val = Vec::with_capacity(val_size);
    let mut test = Vec::with_capacity(test_size);
    for (record, part) in records.into_iter().zip(assignment) {
        match part {
            Part::Train => train.push(record),
            Part::Val => val.push(record),
            Part::Test => test.push(record),
        }
    }
    Ok((train, val, test))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn records(n: usize) -> Vec<NewsRecord> {
        (0..n)
            .map(|i| NewsRecord {
                title: "t".into(),
                body: "b".into(),
                summary: "s".into(),
                keyphrases: vec!["a b".into(), "c d".into()],
                category: "c".into(),
                url: format!("u{i}"),
            })
            .collect()
    }

    #[test]
    fn deterministic_for_a_seed() {
        let a = split_corpus(records(10), 2, 2, 7).unwrap();
        let b = split_corpus(records(10), 2, 2, 7).unwrap();
        assert_eq!(a, b);
        let c = split_corpus(records(10), 2, 2, 8).unwrap();
        assert!(a != c, "different seeds should give different partitions");
    }

    #[test]
    fn zero_sizes_put_everything_in_train() {
        let (train, val, test) = split_corpus(records(5), 0, 0, 1).unwrap();
        assert_eq!(train.len(), 5);
        assert!(val.is_empty());
        assert!(test.is_empty());
    }

    #[test]
    fn sizes_match_the_request() {
        let (train, val, test) = split_corpus(records(100), 25, 25, 42).unwrap();
        assert_eq!((train.len(), val.len(), test.len()), (50, 25, 25));
    }

    #[test]
    fn partition_is_disjoint_and_exhaustive() {
        let input = records(30);
        let urls: std::collections::HashSet<String> =
            input.iter().map(|r| r.url.clone()).collect();
        let (train, val, test) = split_corpus(input, 10, 5, 3).unwrap();
        let mut seen = std::collections::HashSet::new();
        for r in train.iter().chain(&val).chain(&test) {
            assert!(seen.insert(r.url.clone()), "duplicate across parts");
        }
        assert_eq!(seen, urls);
    }

    #[test]
    fn oversized_request_is_an_error() {
        let err = split_corpus(records(3), 2, 2, 0).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("test=2"), "{msg}");
        assert!(msg.contains("3 records"), "{msg}");
    }
}
