"""Decompose a rendered image into Zernike coefficients and rebuild it."""

# %%
import numpy as np

from zernike_uea.imaging import image_field, render_image
from zernike_uea.transform import CoefficientTable, analyze, parseval_gap, truncate_to_tolerance

truth = CoefficientTable.from_entries({(0, 0): 0.6, (1, 1): 0.2, (2, 0): 0.1, (0, 2): 0.1})
img = render_image(truth, 256, 256)
print("image range:", img.values.min().round(3), img.values.max().round(3))

# %%
# Bilinear resampling onto the polar quadrature grid, then the forward transform.
field = image_field(img, 6, 6)
table = analyze(field, 6, 6)
print("recovery error:", table.max_abs_difference(truth.padded(6, 6)))
print("Parseval gap:", parseval_gap(table, field))

# %%
# The smallest rectangle that keeps all but 1e-3 of the energy.
print("kept rectangle:", truncate_to_tolerance(table, 1e-3))
print(np.round(np.abs(table.cropped(2, 2).entries), 4))
