//! The four published period tables, as data.
//!
//! Layouts use the ASCII form `PREFIX(BLOCK)TRAIL`: the parenthesised part
//! is the marked periodic block and `TRAIL` holds any symbols printed after
//! it.

use crate::set::SubtractionSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PublishedRow {
    pub set: SubtractionSet,
    pub layout: &'static str,
    pub period: usize,
}

impl PublishedRow {
    /// Number of symbols printed before the marked block.
    pub fn printed_prefix_len(&self) -> usize {
        self.layout.find('(').unwrap_or(0)
    }
}

fn row(elements: [u32; 3], layout: &'static str, period: usize) -> PublishedRow {
    PublishedRow {
        set: SubtractionSet::new(elements.to_vec()).expect("published sets are valid"),
        layout,
        period,
    }
}

/// `{1,2,k}` for `k = 3..=15`.
pub fn table1() -> Vec<PublishedRow> {
    vec![
        row([1, 2, 3], "(0111)", 4),
        row([1, 2, 4], "(011)", 3),
        row([1, 2, 5], "(011)", 3),
        row([1, 2, 6], "(0110111)", 7),
        row([1, 2, 7], "(011)", 3),
        row([1, 2, 8], "(011)", 3),
        row([1, 2, 9], "(0110110111)", 10),
        row([1, 2, 10], "(011)", 3),
        row([1, 2, 11], "(011)", 3),
        row([1, 2, 12], "(0110110110111)", 13),
        row([1, 2, 13], "(011)", 3),
        row([1, 2, 14], "(011)", 3),
        row([1, 2, 15], "(0110110110110111)", 16),
    ]
}

/// `{1,3,k}` for `k = 4..=18`.
pub fn table2() -> Vec<PublishedRow> {
    vec![
        row([1, 3, 4], "(0101111)", 7),
        row([1, 3, 5], "(01)", 2),
        row([1, 3, 6], "(010101111)", 9),
        row([1, 3, 7], "(01)", 2),
        row([1, 3, 8], "(01010101111)", 11),
        row([1, 3, 9], "(01)", 2),
        row([1, 3, 10], "(0101010101111)", 13),
        row([1, 3, 11], "(01)", 2),
        row([1, 3, 12], "(010101010101111)", 15),
        row([1, 3, 13], "(01)", 2),
        row([1, 3, 14], "(01010101010101111)", 17),
        row([1, 3, 15], "(01)", 2),
        row([1, 3, 16], "(0101010101010101111)", 19),
        row([1, 3, 17], "(01)", 2),
        row([1, 3, 18], "(010101010101010101111)", 21),
    ]
}

/// `{1,k,k+1}` for `k = 2..=14`.
pub fn table3() -> Vec<PublishedRow> {
    vec![
        row([1, 2, 3], "(0111)", 4),
        row([1, 3, 4], "(0101111)", 7),
        row([1, 4, 5], "(01011111)", 8),
        row([1, 5, 6], "(01010111111)", 11),
        row([1, 6, 7], "(010101111111)", 12),
        row([1, 7, 8], "(010101011111111)", 15),
        row([1, 8, 9], "(0101010111111111)", 16),
        row([1, 9, 10], "(0101010101111111111)", 19),
        row([1, 10, 11], "(01010101011111111111)", 20),
        row([1, 11, 12], "(01010101010111111111111)", 23),
        row([1, 12, 13], "(010101010101111111111111)", 24),
        row([1, 13, 14], "(010101010101011111111111111)", 27),
        row([1, 14, 15], "(0101010101010111111111111111)", 28),
    ]
}

/// The six late-starting sets.
pub fn table4() -> Vec<PublishedRow> {
    vec![
        row([1, 4, 10], "010110101111101101(01101101101)", 11),
        row([1, 4, 15], "010110101101011111011(0101101011011011)", 16),
        row([1, 4, 20], "0101101011010110101111101101(011010110101101101101)", 21),
        row([1, 6, 9], "010101101111(01011)01011", 5),
        row([1, 6, 14], "010101101010111111101101010110101101111(01011)01011", 5),
        row([1, 6, 16], "01010110101011011110101101(01011)01011", 5),
    ]
}

pub fn table(id: u8) -> Option<Vec<PublishedRow>> {
    match id {
        1 => Some(table1()),
        2 => Some(table2()),
        3 => Some(table3()),
        4 => Some(table4()),
        _ => None,
    }
}
