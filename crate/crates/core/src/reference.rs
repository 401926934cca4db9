//! Reference operators for the 14-qubit rhombic-dodecahedron code.
//!
//! Qubit 1 is the leftmost letter.

/// Face checks in order `S1X..S4X, S1Y..S4Y, S1Z..S4Z`. The last check is
/// the product of the other eleven.
///
/// `S2Y` acts on qubits {3, 6, 7, 11}. Placing its fourth `Y` on qubit 12
/// instead breaks commutation with `S3X` and `S4Z`.
pub const RD_CHECKS: [&str; 12] = [
    "XXXIIXIIIIIIII",
    "IIXXIIXXIIIIII",
    "IIIIIIIXXIIXXI",
    "XIIIIIIIIXIIXX",
    "IYYYYIIIIIIIII",
    "IIYIIYYIIIYIII",
    "IIIIYIIIYYIIYI",
    "IIIIIIIIIIYYYY",
    "ZZIIZIIIIZIIII",
    "IIIZZIIZZIIIII",
    "IIIIIIZZIIZZII",
    "ZIIIIZIIIIZIIZ",
];

pub const RD_CHECK_NAMES: [&str; 12] = [
    "S1X", "S2X", "S3X", "S4X", "S1Y", "S2Y", "S3Y", "S4Y", "S1Z", "S2Z", "S3Z", "S4Z",
];

/// Logical X̄ representatives along the red, green and blue equators.
pub const RD_LOGICAL_X: [&str; 3] = ["ZIYIIIIZIIIIYI", "IIXIZIIIIIZIXI", "XIIIYIIXIIYIII"];

/// Logical Z̄ partners of [`RD_LOGICAL_X`], on disjoint three-qubit supports.
pub const RD_LOGICAL_Z: [&str; 3] = ["IIXZIIZIIIIIII", "IIIIYIIIXXIIII", "ZIIIIYIIIIIIIY"];

pub const RD_LOGICAL_NAMES: [&str; 3] = ["r", "g", "b"];
