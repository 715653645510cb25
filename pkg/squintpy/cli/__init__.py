from .commands import UsageError
from .main import build_parser, main
from .manifest import RunManifest
