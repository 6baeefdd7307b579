//! Reference values computed independently with scikit-image before the
//! implementation existed.

/// Standard CIEDE2000 verification pairs, unit weights: (c1, c2, ΔE00).
pub const VERIFICATION_PAIRS: [([f64; 3], [f64; 3], f64); 34] = [
    ([50.0000, 2.6772, -79.7751], [50.0000, 0.0000, -82.7485], 2.0424596802),
    ([50.0000, 3.1571, -77.2803], [50.0000, 0.0000, -82.7485], 2.8615101747),
    ([50.0000, 2.8361, -74.0200], [50.0000, 0.0000, -82.7485], 3.4411905987),
    ([50.0000, -1.3802, -84.2814], [50.0000, 0.0000, -82.7485], 0.9999988648),
    ([50.0000, -1.1848, -84.8006], [50.0000, 0.0000, -82.7485], 1.0000047011),
    ([50.0000, -0.9009, -85.5211], [50.0000, 0.0000, -82.7485], 1.0000129676),
    ([50.0000, 0.0000, 0.0000], [50.0000, -1.0000, 2.0000], 2.3668588192),
    ([50.0000, -1.0000, 2.0000], [50.0000, 0.0000, 0.0000], 2.3668588192),
    ([50.0000, 2.4900, -0.0010], [50.0000, -2.4900, 0.0009], 7.1791720113),
    ([50.0000, 2.4900, -0.0010], [50.0000, -2.4900, 0.0010], 7.1791626400),
    ([50.0000, 2.4900, -0.0010], [50.0000, -2.4900, 0.0011], 7.2194721523),
    ([50.0000, 2.4900, -0.0010], [50.0000, -2.4900, 0.0012], 7.2194742125),
    ([50.0000, -0.0010, 2.4900], [50.0000, 0.0009, -2.4900], 4.8045216858),
    ([50.0000, -0.0010, 2.4900], [50.0000, 0.0010, -2.4900], 4.8045245082),
    ([50.0000, -0.0010, 2.4900], [50.0000, 0.0011, -2.4900], 4.7460711138),
    ([50.0000, 2.5000, 0.0000], [50.0000, 0.0000, -2.5000], 4.3064820958),
    ([50.0000, 2.5000, 0.0000], [73.0000, 25.0000, -18.0000], 27.1492313007),
    ([50.0000, 2.5000, 0.0000], [61.0000, -5.0000, 29.0000], 22.8976924698),
    ([50.0000, 2.5000, 0.0000], [56.0000, -27.0000, -3.0000], 31.9030046469),
    ([50.0000, 2.5000, 0.0000], [58.0000, 24.0000, 15.0000], 19.4535214334),
    ([50.0000, 2.5000, 0.0000], [50.0000, 3.1736, 0.5854], 1.0000263434),
    ([50.0000, 2.5000, 0.0000], [50.0000, 3.2972, 0.0000], 0.9999728730),
    ([50.0000, 2.5000, 0.0000], [50.0000, 1.8634, 0.5757], 1.0000494990),
    ([50.0000, 2.5000, 0.0000], [50.0000, 3.2592, 0.3350], 1.0000347617),
    ([60.2574, -34.0099, 36.2677], [60.4626, -34.1751, 39.4387], 1.2644200136),
    ([63.0109, -31.0961, -5.8663], [62.8187, -29.7946, -4.0864], 1.2629592983),
    ([61.2901, 3.7196, -5.3901], [61.4292, 2.2480, -4.9620], 1.8730705001),
    ([35.0831, -44.1164, 3.7933], [35.0232, -40.0716, 1.5901], 1.8644952342),
    ([22.7233, 20.0904, -46.6940], [23.0331, 14.9730, -42.5619], 2.0372582697),
    ([36.4612, 47.8580, 18.3852], [36.2715, 50.5065, 21.2231], 1.4145779225),
    ([90.8027, -2.0831, 1.4410], [91.1528, -1.6435, 0.0447], 1.4441290781),
    ([90.9257, -0.5406, -0.9208], [88.6381, -0.8985, -0.7239], 1.5381170054),
    ([6.7747, -0.2908, -2.4247], [5.8714, -0.0985, -2.2286], 0.6377276719),
    ([2.0776, 0.0795, -1.1350], [0.9033, -0.0636, -0.5514], 0.9082328396),
];

/// Nearest-neighbour ΔE00 (kL = 2) within the Moscow palette, in file order.
pub const MOSCOW_MIN_DE00: [f64; 14] = [
    29.0876458004, 21.7046570094, 19.412776417, 6.2900588338, 20.3794445884, 14.4704086481, 28.3432049291,
    14.4704086481, 9.6786293482, 17.8410657171, 6.2900588338, 11.3915604987, 9.6786293482, 20.3794445884,
];

/// Targets checked by the reproduction suite.
pub const TABLE1_MIN_DE00: [f64; 14] = [29.1, 21.7, 19.4, 6.3, 20.4, 14.5, 28.3, 14.5, 9.4, 17.8, 6.3, 11.3, 9.4, 20.4];
pub const TABLE1_MEAN: f64 = 16.3;
pub const TABLE2_MIN_DE76: [f64; 5] = [114.4, 87.0, 67.7, 65.3, 56.1];
pub const TABLE2_FIRST: [f64; 3] = [83.0, -138.0, 91.0];
pub const TABLE3_MIN_DE00: [f64; 5] = [23.9, 22.0, 19.8, 19.7, 19.8];
pub const TABLE3_FIRST: [f64; 3] = [87.0, -78.0, -21.0];
pub const JOINT_PAIR: [[f64; 3]; 2] = [[84.0, -65.0, -12.0], [86.0, 35.0, 7.0]];
pub const JOINT_PAIR_DE00: f64 = 22.640121973460136;
pub const JOINT_PAPER_DE00: f64 = 22.7;
