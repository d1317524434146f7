use super::PicardError;

/// A conic bundle over `F_n` with its singular fibres and the contact orders
/// between the fixed curve and the negative section `E_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConicBundleModel {
    pub n: u32,
    pub singular_fibres: u32,
    pub contact_orders: Vec<u32>,
}

impl ConicBundleModel {
    /// `E_n^2`.
    pub fn section_self_intersection(&self) -> i64 {
        -(self.n as i64)
    }
}

/// Where the blown-up point of an elementary transformation lies.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TransformCenter {
    OffSection,
    OnSection,
    /// The `i`-th tangency point of the fixed curve with `E_n`.
    Contact(usize),
}

/// `F_n` becomes `F_{n-1}` off `E_n` and `F_{n+1}` on it; at `n = 0` the
/// index always goes up. A tangency point lies on `E_n`, so the index goes
/// up there too and that contact order drops by one; a following
/// transformation at a general point of the curve restores the index.
pub fn elementary_transformation(
    model: &ConicBundleModel,
    center: TransformCenter,
) -> Result<ConicBundleModel, PicardError> {
    let mut out = model.clone();
    match center {
        TransformCenter::OffSection if model.n == 0 => out.n = 1,
        TransformCenter::OffSection => out.n -= 1,
        TransformCenter::OnSection => out.n += 1,
        TransformCenter::Contact(i) => {
            let order = out.contact_orders.get_mut(i).ok_or(PicardError::NoContactPoint(i))?;
            if *order < 2 {
                return Err(PicardError::NotTangent(i));
            }
            *order -= 1;
            out.n += 1;
        }
    }
    Ok(out)
}
