"""Apply an operator to an image file end to end."""

# %%
import tempfile
from pathlib import Path

import numpy as np

from zernike_uea.imaging import DiskImage, load_image, run_pipeline, save_image

work = Path(tempfile.mkdtemp())
save_image(np.ones((128, 128)), work / "white.png")

# %%
# A white disk is V[0,0]; raising both indices gives V[1,1], a radial bowl 2r^2 - 1 in modulus.
result = run_pipeline(
    load_image(work / "white.png"),
    "A+ B+",
    max_k=4,
    max_l=4,
    out_image=work / "bowl.png",
    out_report=work / "report.json",
)
print(result.report)
print("output coefficients:", {k: complex(np.round(v, 6)) for k, v in result.output_coefficients.nonzero().items()})

# %%
# Reading the pixels along the middle row shows |2r^2 - 1| scaled to a peak of 1.
bowl = load_image(work / "bowl.png")
print(np.round(bowl.values[64, ::16], 2))
print((work / "report.json").read_text())
assert isinstance(bowl, DiskImage)
