//! 21-point Gauss-Kronrod rule with adaptive bisection (worst-interval-first,
//! as in QUADPACK's QAG).

use std::collections::BinaryHeap;

use crate::error::{Error, Result};

#[rustfmt::skip]
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

#[rustfmt::skip]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

#[rustfmt::skip]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

pub(crate) struct PanelEstimate {
    pub value: f64,
    pub abs_err: f64,
}

/// One 21-point Gauss-Kronrod panel over [a, b].
pub(crate) fn qk21(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> Result<PanelEstimate> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let mut fv = [0.0f64; 21];
    let eval = |x: f64| -> Result<f64> {
        let v = f(x);
        if v.is_nan() {
            Err(Error::IntegrandNonFinite { at: x })
        } else {
            Ok(v)
        }
    };

    for (i, &xi) in XGK.iter().enumerate().take(10) {
        fv[i] = eval(center - half * xi)?;
        fv[20 - i] = eval(center + half * xi)?;
    }
    fv[10] = eval(center)?;

    let mut kronrod = WGK[10] * fv[10];
    let mut gauss = 0.0;
    let mut res_abs = kronrod.abs();
    for i in 0..10 {
        let pair = fv[i] + fv[20 - i];
        kronrod += WGK[i] * pair;
        res_abs += WGK[i] * (fv[i].abs() + fv[20 - i].abs());
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }

    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[10] * (fv[10] - mean).abs();
    for i in 0..10 {
        res_asc += WGK[i] * ((fv[i] - mean).abs() + (fv[20 - i] - mean).abs());
    }

    let value = kronrod * half;
    let raw_err = ((kronrod - gauss) * half).abs();
    res_abs *= half.abs();
    res_asc *= half.abs();

    // QUADPACK error rescaling
    let mut abs_err = raw_err;
    if res_asc != 0.0 && abs_err != 0.0 {
        let scale = (200.0 * abs_err / res_asc).powf(1.5);
        abs_err = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        abs_err = abs_err.max(50.0 * f64::EPSILON * res_abs);
    }

    Ok(PanelEstimate { value, abs_err })
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    abs_err: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.abs_err == other.abs_err && self.a == other.a
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // worst error first; break ties on the left endpoint for determinism
        self.abs_err
            .partial_cmp(&other.abs_err)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(
                other
                    .a
                    .partial_cmp(&self.a)
                    .unwrap_or(std::cmp::Ordering::Equal),
            )
    }
}

/// Adaptive Gauss-Kronrod bisection: returns (value, abs_err, panels_used).
pub(crate) fn adaptive_gk(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
    max_subdivisions: usize,
) -> Result<(f64, f64, usize)> {
    let first = qk21(f, a, b)?;
    let mut heap = BinaryHeap::new();
    let mut total = first.value;
    let mut total_err = first.abs_err;
    heap.push(Segment {
        a,
        b,
        value: first.value,
        abs_err: first.abs_err,
    });
    let mut panels = 1usize;

    while total_err > abs_tol.max(rel_tol * total.abs()) {
        if panels >= max_subdivisions {
            return Err(Error::Convergence {
                context: "adaptive Gauss-Kronrod",
                best: total,
                abs_err: total_err,
            });
        }
        let worst = match heap.pop() {
            Some(s) => s,
            None => break,
        };
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval at floating-point resolution; accept as is
            heap.push(worst);
            break;
        }
        let left = qk21(f, worst.a, mid)?;
        let right = qk21(f, mid, worst.b)?;
        total += left.value + right.value - worst.value;
        total_err += left.abs_err + right.abs_err - worst.abs_err;
        heap.push(Segment {
            a: worst.a,
            b: mid,
            value: left.value,
            abs_err: left.abs_err,
        });
        heap.push(Segment {
            a: mid,
            b: worst.b,
            value: right.value,
            abs_err: right.abs_err,
        });
        panels += 1;
    }

    // tighten the accumulated drift
    let (mut v, mut e) = (0.0, 0.0);
    for s in heap.iter() {
        v += s.value;
        e += s.abs_err;
    }
    Ok((v, e, panels))
}
