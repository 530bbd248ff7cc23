//! Embedded study data, transcribed digit for digit from the published
//! tables and appendices. Column 1 is perceived customer value (V2C),
//! column 2 is value generated for the firm (V2F); both are benefit
//! criteria and arrive already normalized.

/// Number of customers in the study.
pub const CUSTOMER_COUNT: usize = 47;

/// The normalized 47 x 2 decision matrix, row i = customer C{i+1}.
pub const MATRIX: [[f64; 2]; CUSTOMER_COUNT] = [
    [0.907, 0.521],
    [0.641, 0.268],
    [0.854, 0.778],
    [0.209, 0.078],
    [0.111, 0.028],
    [0.899, 0.092],
    [0.372, 0.136],
    [0.111, 0.093],
    [0.111, 0.032],
    [0.622, 0.221],
    [0.489, 0.136],
    [0.529, 0.419],
    [0.949, 0.2],
    [0.289, 0.156],
    [0.555, 0.166],
    [0.422, 0.268],
    [0.422, 0.147],
    [0.72, 0.156],
    [0.16, 0.119],
    [0.809, 0.259],
    [0.289, 0.294],
    [0.555, 0.14],
    [0.555, 0.633],
    [0.244, 0.147],
    [0.16, 0.092],
    [0.622, 0.107],
    [0.622, 0.419],
    [0.555, 0.354],
    [0.209, 0.044],
    [0.672, 0.722],
    [1.0, 0.151],
    [0.209, 0.114],
    [0.489, 0.521],
    [0.372, 0.354],
    [0.88, 0.239],
    [0.111, 0.0],
    [0.489, 0.186],
    [0.289, 0.133],
    [0.808, 1.0],
    [0.372, 0.604],
    [0.773, 0.46],
    [0.889, 0.23],
    [0.489, 0.778],
    [0.72, 0.294],
    [0.8, 0.188],
    [0.672, 0.924],
    [0.808, 0.309],
];

/// The proportions grid (P) exactly as published alongside the entropy
/// computation. Row C18, column 1 is inconsistent with [`MATRIX`]: the
/// printed 0.00447 is the proportion of the value 0.111, not of the
/// matrix entry 0.720. The published entropies and weights follow from
/// this grid as printed.
pub const PUBLISHED_PROPORTIONS: [[f64; 2]; CUSTOMER_COUNT] = [
    [0.036523, 0.038029],
    [0.025811, 0.019577],
    [0.034388, 0.05671],
    [0.008416, 0.005663],
    [0.00447, 0.002024],
    [0.0362, 0.006735],
    [0.014979, 0.009902],
    [0.00447, 0.006783],
    [0.00447, 0.002352],
    [0.025046, 0.016111],
    [0.019691, 0.009937],
    [0.021301, 0.030564],
    [0.038214, 0.01459],
    [0.011637, 0.011347],
    [0.022348, 0.012096],
    [0.016993, 0.019577],
    [0.016993, 0.010702],
    [0.00447, 0.011368],
    [0.006443, 0.008688],
    [0.032576, 0.018866],
    [0.011637, 0.02146],
    [0.022348, 0.01022],
    [0.022348, 0.046156],
    [0.009825, 0.010756],
    [0.006443, 0.006735],
    [0.025046, 0.007807],
    [0.025046, 0.030564],
    [0.022348, 0.025851],
    [0.008416, 0.003186],
    [0.02706, 0.052662],
    [0.040267, 0.010985],
    [0.008416, 0.008343],
    [0.019691, 0.038029],
    [0.014979, 0.025851],
    [0.035435, 0.017433],
    [0.00447, 0.0],
    [0.019691, 0.013592],
    [0.011637, 0.009681],
    [0.032536, 0.072924],
    [0.014979, 0.044016],
    [0.031127, 0.033538],
    [0.035798, 0.016795],
    [0.019691, 0.05671],
    [0.028993, 0.02146],
    [0.032214, 0.0137],
    [0.02706, 0.067391],
    [0.032536, 0.022533],
];

/// Published per-criterion entropies.
pub const PUBLISHED_ENTROPIES: [f64; 2] = [0.9446, 0.9198];

/// Published per-criterion divergences (1 - e).
pub const PUBLISHED_DIVERGENCES: [f64; 2] = [0.0553, 0.0802];

/// Published entropy weights (appendix value; the running text of the
/// study states 0.492/0.508 instead, which nothing downstream uses).
pub const PUBLISHED_WEIGHTS: [f64; 2] = [0.4083, 0.5917];

/// Weights quoted in the study's running text; kept as a documented
/// erratum, not used by any computation.
pub const BODY_TEXT_WEIGHTS: [f64; 2] = [0.492, 0.508];

/// The published weighted normalized matrix (V2C, V2F).
pub const PUBLISHED_WEIGHTED: [[f64; 2]; CUSTOMER_COUNT] = [
    [0.370318, 0.308568],
    [0.261713, 0.158851],
    [0.348679, 0.460147],
    [0.085332, 0.045948],
    [0.04532, 0.016419],
    [0.367052, 0.054648],
    [0.151884, 0.080348],
    [0.04532, 0.055037],
    [0.04532, 0.019087],
    [0.253956, 0.13073],
    [0.199653, 0.080626],
    [0.215985, 0.248003],
    [0.387466, 0.118383],
    [0.117996, 0.092067],
    [0.2266, 0.098149],
    [0.172298, 0.158851],
    [0.172298, 0.086839],
    [0.293968, 0.092243],
    [0.065326, 0.070493],
    [0.330306, 0.153081],
    [0.117996, 0.17413],
    [0.2266, 0.082924],
    [0.2266, 0.374515],
    [0.099623, 0.087274],
    [0.065326, 0.054648],
    [0.253956, 0.063348],
    [0.253956, 0.248003],
    [0.2266, 0.209758],
    [0.085332, 0.02585],
    [0.27437, 0.427301],
    [0.408289, 0.089134],
    [0.085332, 0.067699],
    [0.199653, 0.308568],
    [0.151884, 0.209758],
    [0.359294, 0.14145],
    [0.04532, 0.0],
    [0.199653, 0.110289],
    [0.117996, 0.078549],
    [0.329898, 0.591711],
    [0.151884, 0.357146],
    [0.315607, 0.272129],
    [0.362969, 0.136278],
    [0.199653, 0.460147],
    [0.293968, 0.17413],
    [0.326631, 0.111165],
    [0.27437, 0.54682],
    [0.329898, 0.182838],
];

/// Published separations and closeness (d+, d-, cl). Known erratum:
/// these values are not reproducible from [`PUBLISHED_WEIGHTED`] (nor
/// from any stated weighting) and they disagree with the published
/// TOPSIS results; they are embedded for the record and excluded from
/// reproduction gates.
pub const PUBLISHED_SEPARATIONS: [[f64; 3]; CUSTOMER_COUNT] = [
    [0.240002, 0.479002, 0.666202],
    [0.403353, 0.299989, 0.426519],
    [0.132139, 0.537441, 0.802654],
    [0.606087, 0.062762, 0.093836],
    [0.657827, 0.013645, 0.020321],
    [0.44926, 0.403082, 0.472911],
    [0.531483, 0.148515, 0.218405],
    [0.634886, 0.045737, 0.067199],
    [0.656217, 0.015862, 0.023601],
    [0.428569, 0.281531, 0.396467],
    [0.497847, 0.203474, 0.290129],
    [0.372688, 0.295997, 0.442656],
    [0.394205, 0.437143, 0.525824],
    [0.550457, 0.118487, 0.177125],
    [0.468395, 0.239959, 0.338755],
    [0.464441, 0.205945, 0.307204],
    [0.512193, 0.173766, 0.253318],
    [0.438795, 0.318886, 0.420871],
    [0.443896, 0.063656, 0.125418],
    [0.377222, 0.37689, 0.49978],
    [0.501019, 0.170662, 0.254082],
    [0.479514, 0.235958, 0.329794],
    [0.289372, 0.38444, 0.570545],
    [0.568666, 0.099146, 0.148464],
    [0.617642, 0.051795, 0.077372],
    [0.479281, 0.265006, 0.356054],
    [0.344236, 0.331562, 0.490623],
    [0.389756, 0.285155, 0.422507],
    [0.618685, 0.054245, 0.08061],
    [0.215547, 0.455413, 0.678748],
    [0.417659, 0.457881, 0.52297],
    [0.592682, 0.075141, 0.112517],
    [0.350462, 0.32042, 0.47761],
    [0.450152, 0.219053, 0.327333],
    [0.379121, 0.408152, 0.518438],
    [0.667809, 0.0, 0.0],
    [0.47699, 0.212868, 0.308567],
    [0.55898, 0.111563, 0.166377],
    [0.097587, 0.606055, 0.861311],
    [0.374008, 0.325098, 0.46502],
    [0.289563, 0.40541, 0.583347],
    [0.382662, 0.41133, 0.518053],
    [0.281799, 0.427949, 0.602959],
    [0.375072, 0.34169, 0.476713],
    [0.412085, 0.362177, 0.467771],
    [0.170835, 0.536476, 0.758473],
    [0.353524, 0.385473, 0.521617],
];

/// Published SAW results as (score, rank), row i = customer C{i+1}.
pub const PUBLISHED_SAW: [(f64, u32); CUSTOMER_COUNT] = [
    (0.679, 5),
    (0.421, 23),
    (0.809, 3),
    (0.131, 41),
    (0.062, 46),
    (0.422, 22),
    (0.232, 35),
    (0.1, 44),
    (0.064, 45),
    (0.385, 25),
    (0.28, 33),
    (0.464, 19),
    (0.506, 12),
    (0.21, 36),
    (0.325, 28),
    (0.331, 27),
    (0.259, 34),
    (0.386, 24),
    (0.136, 40),
    (0.483, 17),
    (0.292, 32),
    (0.31, 31),
    (0.601, 7),
    (0.187, 38),
    (0.12, 42),
    (0.317, 29),
    (0.502, 13),
    (0.436, 21),
    (0.111, 43),
    (0.702, 4),
    (0.497, 16),
    (0.153, 39),
    (0.508, 11),
    (0.362, 26),
    (0.501, 14),
    (0.045, 47),
    (0.31, 30),
    (0.197, 37),
    (0.922, 1),
    (0.509, 10),
    (0.588, 8),
    (0.499, 15),
    (0.66, 6),
    (0.468, 18),
    (0.438, 20),
    (0.821, 2),
    (0.513, 9),
];

/// Published TOPSIS results as (closeness, rank), row i = customer C{i+1}.
/// Known erratum: the C19 closeness 0.122 is inconsistent with
/// [`PUBLISHED_WEIGHTED`] (recomputation gives ~0.105, below C32).
pub const PUBLISHED_TOPSIS: [(f64, u32); CUSTOMER_COUNT] = [
    (0.611, 6),
    (0.37, 23),
    (0.792, 3),
    (0.088, 41),
    (0.024, 46),
    (0.377, 22),
    (0.189, 35),
    (0.078, 43),
    (0.027, 45),
    (0.336, 26),
    (0.24, 33),
    (0.433, 13),
    (0.433, 14),
    (0.169, 36),
    (0.282, 29),
    (0.292, 27),
    (0.216, 34),
    (0.341, 24),
    (0.122, 39),
    (0.421, 18),
    (0.271, 30),
    (0.27, 31),
    (0.595, 7),
    (0.148, 38),
    (0.084, 42),
    (0.284, 28),
    (0.462, 11),
    (0.396, 20),
    (0.068, 44),
    (0.696, 4),
    (0.426, 17),
    (0.113, 40),
    (0.495, 10),
    (0.338, 25),
    (0.432, 15),
    (0.0, 47),
    (0.266, 32),
    (0.154, 37),
    (0.893, 1),
    (0.517, 9),
    (0.535, 8),
    (0.43, 16),
    (0.663, 5),
    (0.412, 19),
    (0.383, 21),
    (0.808, 2),
    (0.448, 12),
];

/// The published consensus chain as tie groups, best first. Known
/// erratum: the middle of this chain is not reproducible by pairwise
/// majority over the two published rankings (it places C44 ahead of
/// C20 although C20 leads in both, and ties C2/C18 and C6/C28 although
/// one side of each pair leads in both).
pub const PUBLISHED_CHAIN: &[&[&str]] = &[
    &["C39"],
    &["C46"],
    &["C3"],
    &["C30"],
    &["C1", "C43"],
    &["C23"],
    &["C41"],
    &["C40"],
    &["C47"],
    &["C33"],
    &["C27"],
    &["C13"],
    &["C35"],
    &["C42"],
    &["C12", "C31"],
    &["C44"],
    &["C20"],
    &["C45"],
    &["C6", "C28"],
    &["C2", "C18"],
    &["C10"],
    &["C34"],
    &["C16"],
    &["C15", "C26"],
    &["C37"],
    &["C21", "C22"],
    &["C11"],
    &["C17"],
    &["C7"],
    &["C14"],
    &["C38"],
    &["C24"],
    &["C19", "C32"],
    &["C4"],
    &["C25"],
    &["C8", "C29"],
    &["C9"],
    &["C5"],
    &["C36"],
];
