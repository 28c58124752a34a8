//! Published reference values for the two bundled examples.

pub const EX1_CRITERIA: [&str; 5] = ["Income", "Social image", "Hard work", "Distance", "Security"];

pub const EX1_ENTROPY_E: [f64; 5] = [0.9563, 0.9355, 0.9232, 0.6254, 0.8691];
pub const EX1_ENTROPY_W: [f64; 5] = [0.0633, 0.0934, 0.1112, 0.5425, 0.1896];

pub const EX1_DWM_MEAN: [f64; 5] = [19.25, 4.75, 2.5, 11.0, 3.25];
pub const EX1_DWM_STD: [f64; 5] = [6.832825, 1.920286, 1.118034, 11.46734, 1.920286];
pub const EX1_DWM_CV: [f64; 5] = [0.354952, 0.404271, 0.447214, 1.042486, 0.590857];
pub const EX1_DWM_W: [f64; 5] = [0.124993, 0.14236, 0.157482, 0.367101, 0.208065];

pub const EX1_RANKS: [usize; 5] = [5, 4, 3, 1, 2];
pub const EX1_PEARSON: f64 = 0.997;

pub const EX2_CRITERIA: [&str; 21] = [
    "F1", "F2", "F6", "F8", "F9", "F11", "F12", "F13", "F14", "F15", "F16", "F17", "F18", "F24",
    "F25", "F19", "F3", "F5", "F20", "F21", "F22",
];

pub const EX2_ENTROPY_W: [f64; 21] = [
    0.0065, 0.0680, 0.0288, 0.0340, 0.0337, 0.0286, 0.0469, 0.0367, 0.0131, 0.0136, 0.0497,
    0.0380, 0.0491, 0.0670, 0.0824, 0.0119, 0.0438, 0.0111, 0.2355, 0.0771, 0.0245,
];

pub const EX2_DWM_W: [f64; 21] = [
    0.0193, 0.0638, 0.0439, 0.0399, 0.0390, 0.0377, 0.0438, 0.0432, 0.0283, 0.0311, 0.0529,
    0.0528, 0.0430, 0.0569, 0.0716, 0.0270, 0.0505, 0.0261, 0.1276, 0.0639, 0.0379,
];

/// Entropy rank column of the published comparison table.
pub const EX2_ENTROPY_RANKS: [usize; 21] = [
    21, 4, 14, 12, 13, 15, 8, 11, 18, 17, 6, 10, 7, 5, 2, 19, 9, 20, 1, 3, 16,
];

/// Dispersion rank column of the published comparison table. It repeats
/// rank 10 and skips rank 12.
pub const EX2_DWM_RANKS: [usize; 21] = [
    21, 4, 9, 13, 14, 15, 10, 11, 18, 17, 6, 10, 7, 5, 2, 19, 8, 20, 1, 3, 16,
];

pub const EX2_PEARSON: f64 = 0.980;

/// Pearson between the two weight vectors on the example 2 matrix,
/// computed independently in double precision with numpy
/// (`np.corrcoef`) from the fixture values.
pub const EX2_PEARSON_COMPUTED: f64 = 0.975102;
