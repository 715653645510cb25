import json
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from os import PathLike
from typing import Union

from squintpy._version import __version__
from squintpy.core.io import scenario_digest
from squintpy.core.scenario import Scenario

__all__ = ["RunManifest", "manifest_path"]


@dataclass(frozen=True)
class RunManifest:
    """Provenance record written next to every CSV the command line tool emits"""
    command: str
    scenario_digest: str
    seed: int
    version: str
    timestamp: str

    @classmethod
    def create(cls, command: str, scenario: Scenario):
        return cls(command=command,
                   scenario_digest=scenario_digest(scenario),
                   seed=int(scenario.seed),
                   version=__version__,
                   timestamp=datetime.now(timezone.utc).isoformat(timespec='seconds'))

    def write(self, path: Union[str, PathLike]):
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(asdict(self), f, indent=2, sort_keys=True)
            f.write('\n')


def manifest_path(out: Union[str, PathLike]) -> str:
    return f"{out}.manifest.json"
