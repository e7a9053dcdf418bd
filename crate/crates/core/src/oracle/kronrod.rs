//! Globally adaptive 21-point Gauss–Kronrod quadrature for complex-valued
//! integrands on a real interval.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

// QUADPACK constants, kept at their published precision
#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_745_957_576,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Gauss weights for the abscissae `XGK[1], XGK[3], …, XGK[9]`.
#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[derive(Debug, Clone, Copy)]
pub struct Estimate {
    pub value: Complex64,
    pub error: f64,
    /// `∫|f|` on the same rule, used to set rounding-level floors.
    pub abs_value: f64,
}

/// One Gauss–Kronrod 10/21 application on `[a, b]`.
pub fn gk21<F>(f: &F, a: f64, b: f64) -> Estimate
where
    F: Fn(f64) -> Complex64,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[10];
    let mut gauss = Complex64::new(0.0, 0.0);
    let mut abs_value = fc.norm() * WGK[10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        kronrod += (f1 + f2) * WGK[j];
        abs_value += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            gauss += (f1 + f2) * WG[j / 2];
        }
    }
    Estimate {
        value: kronrod * half,
        error: ((kronrod - gauss) * half).norm(),
        abs_value: abs_value * half.abs(),
    }
}

#[derive(Debug, Clone, Copy)]
struct Piece {
    a: f64,
    b: f64,
    est: Estimate,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.est.error == other.est.error
    }
}

impl Eq for Piece {}

impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.est.error.total_cmp(&other.est.error)
    }
}

/// Outcome of [`integrate`]; `converged` is false when the subdivision
/// budget ran out first.
#[derive(Debug, Clone, Copy)]
pub struct Integral {
    pub value: Complex64,
    pub error: f64,
    pub abs_value: f64,
    pub subdivisions: usize,
    pub converged: bool,
}

/// Bisects the interval with the largest error estimate until the total
/// error is at most `max(abs_tol, rel_tol·|I|)`, or until `max_subdivisions`
/// bisections have been spent.
pub fn integrate<F>(f: F, a: f64, b: f64, abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Integral
where
    F: Fn(f64) -> Complex64,
{
    let first = gk21(&f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Piece { a, b, est: first });
    let mut value = first.value;
    let mut error = first.error;
    let mut abs_value = first.abs_value;
    let mut subdivisions = 0;
    loop {
        // rounding floor: the rule cannot resolve below ~50 ulp of ∫|f|
        let floor = 50.0 * f64::EPSILON * abs_value;
        let target = abs_tol.max(rel_tol * value.norm()).max(floor);
        if error <= target {
            return Integral {
                value,
                error,
                abs_value,
                subdivisions,
                converged: true,
            };
        }
        if subdivisions >= max_subdivisions {
            return Integral {
                value,
                error,
                abs_value,
                subdivisions,
                converged: false,
            };
        }
        let worst = heap.pop().expect("heap holds at least one piece");
        let mid = 0.5 * (worst.a + worst.b);
        let left = gk21(&f, worst.a, mid);
        let right = gk21(&f, mid, worst.b);
        value += left.value + right.value - worst.est.value;
        abs_value += left.abs_value + right.abs_value - worst.est.abs_value;
        heap.push(Piece { a: worst.a, b: mid, est: left });
        heap.push(Piece { a: mid, b: worst.b, est: right });
        // re-sum to keep cancellation in the running total from drifting
        error = heap.iter().map(|p| p.est.error).sum();
        subdivisions += 1;
    }
}
