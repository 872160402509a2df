//! Published gap sets used as golden fixtures.

/// Gaps of `H(Q)` for `q = 5`.
pub const ONE_POINT_Q5: [i64; 116] = [
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 26,
    27, 28, 29, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 51,
    52, 53, 54, 57, 58, 59, 61, 62, 63, 64, 65, 66, 67, 68, 69, 70, 71, 72, 73, 74, 76, 77, 78,
    79, 82, 83, 84, 88, 89, 91, 92, 93, 94, 95, 96, 97, 98, 99, 101, 102, 103, 104, 107, 108,
    109, 113, 114, 119, 121, 122, 123, 124, 127, 128, 129, 133, 134, 139, 152, 153, 154, 158,
    159, 164, 183, 184, 189, 214,
];

/// Off-diagonal pure gaps `(a, b)` with `a < b` at `(Q_1, Q_2)` for `q = 3`.
pub const TWO_POINT_QQ_Q3: [(i64, i64); 79] = [
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 10), (1, 11), (1, 13), (1, 14),
    (1, 15), (1, 16), (1, 17), (1, 19), (1, 20), (1, 23), (2, 3), (2, 4), (2, 5), (2, 6),
    (2, 7), (2, 8), (2, 10), (2, 11), (2, 13), (2, 14), (2, 15), (2, 16), (2, 17), (2, 19),
    (2, 20), (2, 23), (2, 26), (2, 29), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8), (3, 10),
    (3, 11), (3, 13), (3, 14), (4, 5), (4, 6), (4, 7), (4, 8), (4, 10), (4, 11), (4, 13),
    (4, 14), (5, 6), (5, 7), (5, 8), (5, 10), (5, 11), (5, 13), (5, 14), (5, 17), (5, 19),
    (5, 20), (5, 23), (5, 26), (7, 8), (7, 10), (7, 11), (7, 13), (7, 14), (7, 17), (8, 10),
    (8, 11), (8, 13), (8, 14), (8, 17), (11, 13), (11, 14), (11, 17), (14, 17),
];

/// Diagonal pure gaps at `(Q_1, Q_2)` for `q = 3`.
pub const TWO_POINT_QQ_Q3_DIAGONAL: [(i64, i64); 9] = [
    (1, 1), (2, 2), (3, 3), (4, 4), (5, 5), (7, 7), (8, 8), (11, 11), (14, 14),
];

/// Off-diagonal pure gaps `(a, b)` with `a < b` at `(Q_1, P_1)` for `q = 3`.
pub const TWO_POINT_QP_Q3: [(i64, i64); 86] = [
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 10), (1, 11), (1, 13), (1, 14),
    (1, 15), (1, 16), (1, 17), (1, 19), (1, 20), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 8),
    (2, 10), (2, 11), (2, 13), (2, 14), (2, 15), (2, 16), (2, 17), (2, 19), (2, 20), (2, 25),
    (2, 26), (2, 29), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8), (3, 10), (3, 11), (3, 13),
    (3, 14), (3, 15), (3, 16), (3, 17), (3, 19), (3, 20), (3, 25), (3, 26), (4, 5), (4, 6),
    (4, 7), (4, 8), (4, 10), (4, 11), (4, 13), (4, 14), (4, 15), (4, 16), (4, 17), (4, 19),
    (5, 6), (5, 7), (5, 8), (5, 10), (6, 7), (6, 8), (6, 10), (6, 13), (6, 14), (6, 15),
    (6, 16), (6, 17), (6, 19), (6, 25), (7, 8), (7, 10), (7, 13), (7, 14), (7, 15), (7, 16),
    (10, 13), (13, 15), (13, 16), (15, 16),
];

/// Diagonal pure gaps at `(Q_1, P_1)` for `q = 3`.
pub const TWO_POINT_QP_Q3_DIAGONAL: [(i64, i64); 10] = [
    (1, 1), (2, 2), (3, 3), (4, 4), (5, 5), (6, 6), (7, 7), (10, 10), (13, 13), (15, 15),
];

/// Gaps of `H(Q)` for `q = 2`.
pub const ONE_POINT_Q2: [i64; 5] = [1, 2, 3, 5, 7];

/// A fixture pair set closed under swapping, plus its diagonal, sorted.
pub fn symmetric_closure(pairs: &[(i64, i64)], diagonal: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut out: Vec<(i64, i64)> = pairs
        .iter()
        .flat_map(|&(a, b)| [(a, b), (b, a)])
        .chain(diagonal.iter().copied())
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}
