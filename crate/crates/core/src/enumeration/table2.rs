//! Published semi-reduced counts used as regression targets.

/// `(sizes, class, h)`.
pub type Entry = (&'static [usize], usize, u64);

/// Entries that finish in seconds to minutes on one core.
pub const DESK: &[Entry] = &[
    (&[2, 2, 2], 1, 1),
    (&[3, 2, 2], 1, 6),
    (&[3, 2, 2], 2, 4),
    (&[3, 3, 2], 1, 4),
    (&[3, 3, 2], 2, 448),
    (&[3, 3, 3], 1, 4),
    (&[3, 3, 3], 2, 40),
    (&[4, 2, 2], 1, 321),
    (&[4, 2, 2], 2, 81),
    (&[2, 2, 2, 2], 1, 1),
    (&[2, 2, 2, 2], 3, 1),
    (&[3, 2, 2, 2], 1, 38),
    (&[3, 2, 2, 2], 2, 0),
    (&[3, 3, 2, 2], 1, 12),
    (&[3, 3, 2, 2], 2, 176),
    (&[3, 3, 3, 2], 1, 8),
    (&[3, 3, 3, 2], 2, 104),
    (&[3, 3, 3, 3], 1, 8),
    (&[3, 3, 3, 3], 2, 104),
    (&[4, 2, 2, 2], 2, 576),
    (&[2, 2, 2, 2, 2], 1, 1),
    (&[3, 3, 2, 2, 2], 2, 0),
    (&[3, 3, 3, 2, 2], 1, 24),
    (&[3, 3, 3, 2, 2], 2, 0),
];

/// Larger entries, hours of search.
pub const EXTENDED: &[Entry] = &[
    (&[5, 2, 2], 1, 33_372),
    (&[5, 2, 2], 2, 1_936),
    (&[4, 3, 2], 2, 190_992),
    (&[3, 2, 2, 2], 3, 11_520),
    (&[4, 2, 2, 2], 1, 119_001),
];
