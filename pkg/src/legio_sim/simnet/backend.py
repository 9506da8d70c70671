"""Engine backend selection: compiled kernel when available, pure otherwise.

``LEGIO_SIM_BACKEND=py`` forces the pure-Python kernel, ``=cy`` demands the
compiled one (ImportError if the extension was not built). Both expose the
same ``EngineWorld`` and byte-identical traces.
"""

import os

_forced = os.environ.get("LEGIO_SIM_BACKEND", "auto").strip().lower()

if _forced in ("py", "pure", "python"):
    from . import _engine as _impl

    COMPILED = False
elif _forced in ("cy", "compiled", "ext"):
    from . import _engine_cy as _impl  # type: ignore[no-redef]

    COMPILED = True
elif _forced in ("auto", ""):
    try:
        from . import _engine_cy as _impl  # type: ignore[no-redef]

        COMPILED = True
    except ImportError:
        from . import _engine as _impl

        COMPILED = False
else:
    raise RuntimeError(f"LEGIO_SIM_BACKEND={_forced!r} not recognized (use auto|py|cy)")

BACKEND = "cy" if COMPILED else "py"
EngineWorld = _impl.EngineWorld
