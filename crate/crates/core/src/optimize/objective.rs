use crate::color::{Lab, Metric};
use crate::scalar::Scalar;

/// Smallest distance among the new colors and from each new color to the
/// existing ones. +∞ when there is nothing to compare against.
pub fn maximin_objective<T: Scalar>(xs: &[Lab<T>], sites: &[Lab<T>], metric: &Metric<T>) -> T {
    let mut m = T::infinity();
    for (i, x) in xs.iter().enumerate() {
        for p in sites {
            m = m.min(metric.distance(x, p));
        }
        for y in &xs[i + 1..] {
            m = m.min(metric.distance(x, y));
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::{min_distance, moscow_2014, DeltaE2000Weights};

    #[test]
    fn reduces_to_min_distance() {
        let p = moscow_2014::<f64>();
        let x = Lab::new(70.0, 40.0, -60.0);
        for metric in [Metric::Cie76, Metric::de2000_default()] {
            let (d, _) = min_distance(&x, p.colors(), &metric).unwrap();
            assert_eq!(maximin_objective(&[x], p.colors(), &metric), d);
        }
        assert_eq!(maximin_objective(&[p.colors()[3]], p.colors(), &Metric::Cie76), 0.0);
        assert_eq!(maximin_objective(&[x, x], p.colors(), &Metric::Cie76), 0.0);
    }

    #[test]
    fn two_new_colors_against_moscow() {
        let xs = [Lab::new(84.0, -65.0, -12.0), Lab::new(86.0, 35.0, 7.0)];
        let w = Metric::Ciede2000(DeltaE2000Weights::map_palette());
        let v = maximin_objective(&xs, moscow_2014::<f64>().colors(), &w);
        assert!((v - 22.7).abs() < 0.5, "{v}");
        // skimage.color.deltaE_ciede2000(kL=2)
        assert!((v - 22.640_121_973_5).abs() < 1e-8);
    }
}
