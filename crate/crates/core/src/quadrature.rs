//! Gauss-Kronrod panels for oscillatory integrands whose phase is known
//! analytically, so panel edges can be placed on phase level sets.

use num_complex::Complex64;

// 15-point Kronrod abscissae and weights, with the embedded 7-point Gauss rule.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

pub(crate) const NODES_PER_PANEL: usize = 15;

/// Kronrod estimate of one panel and `|K15 - G7|`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PanelEstimate {
    pub value: Complex64,
    pub error: f64,
    pub abs_value: f64,
}

pub(crate) fn gauss_kronrod_15<F>(f: &F, lo: f64, hi: f64) -> PanelEstimate
where
    F: Fn(f64) -> Complex64,
{
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs_sum = fc.norm() * WGK[7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        let pair = f1 + f2;
        kronrod += pair * WGK[j];
        abs_sum += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    PanelEstimate {
        value: kronrod * half,
        error: ((kronrod - gauss) * half).norm(),
        abs_value: abs_sum * half.abs(),
    }
}

/// Running sum over panels, with an error budget that also charges roundoff.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct PanelSum {
    pub value: Complex64,
    pub rule_error: f64,
    pub abs_value: f64,
    pub panels: usize,
}

impl PanelSum {
    pub fn add(&mut self, panel: PanelEstimate) {
        self.value += panel.value;
        self.rule_error += panel.error;
        self.abs_value += panel.abs_value;
        self.panels += 1;
    }

    pub fn merge(&mut self, other: &PanelSum) {
        self.value += other.value;
        self.rule_error += other.rule_error;
        self.abs_value += other.abs_value;
        self.panels += other.panels;
    }

    pub fn error_estimate(&self) -> f64 {
        self.rule_error + 16.0 * f64::EPSILON * self.abs_value * (self.panels.max(1) as f64).sqrt()
    }
}

/// Next panel edge in a variable `u` whose phase is `phi0 * u^2`.
///
/// Each panel advances the phase by at most `phase_cap` and is never wider
/// than `max_width(u)`.
pub(crate) fn next_quadratic_level(
    u: f64,
    phi0: f64,
    phase_cap: f64,
    max_width: f64,
    end: f64,
) -> f64 {
    let level = (u * u + phase_cap / phi0).sqrt();
    level.min(u + max_width).min(end)
}
