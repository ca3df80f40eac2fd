"""Run one CLI verb over several input files, optionally in parallel."""

import sys
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

from errors import HypergraphError

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

Job = Callable[[str], Tuple[int, str]]


@dataclass(frozen=True)
class BatchResult:
    path: str
    exit_code: int
    output: str


def _guarded(job: Job, path: str) -> BatchResult:
    try:
        code, output = job(path)
    except HypergraphError as e:
        print(f"[BATCH] {path}: {e.message}", file=sys.stderr, flush=True)
        return BatchResult(path, EXIT_ERROR, '')
    except OSError as e:
        print(f"[BATCH] {path}: cannot read file ({e.strerror or e})", file=sys.stderr, flush=True)
        return BatchResult(path, EXIT_ERROR, '')
    except UnicodeDecodeError as e:
        print(f"[CLI] INVALID_INPUT: {path} is not UTF-8 text ({e.reason})", file=sys.stderr, flush=True)
        return BatchResult(path, EXIT_ERROR, '')
    return BatchResult(path, code, output)


def run_batch(paths: Sequence[str], job: Job, jobs: int = 1) -> List[BatchResult]:
    """
    Apply ``job`` to every path.

    Args:
        paths: Input files
        job: Picklable callable returning (exit code, stdout text)
        jobs: Worker processes; 1 runs in this process

    Returns:
        Results in input order
    """
    if jobs <= 1 or len(paths) <= 1:
        return [_guarded(job, path) for path in paths]

    results: List[BatchResult] = [None] * len(paths)
    max_workers = min(jobs, len(paths))
    with ProcessPoolExecutor(max_workers=max_workers) as executor:
        future_to_index = {
            executor.submit(_guarded, job, path): index
            for index, path in enumerate(paths)
        }

        completed = 0
        for future in as_completed(future_to_index):
            completed += 1
            index = future_to_index[future]
            try:
                results[index] = future.result()
            except Exception as e:
                print(f"[BATCH] Error processing {paths[index]}: {e}", file=sys.stderr, flush=True)
                results[index] = BatchResult(paths[index], EXIT_ERROR, '')

            if completed % 20 == 0 or completed == len(paths):
                print(f"[BATCH] Processed {completed}/{len(paths)}", file=sys.stderr, flush=True)

    return results


def combined_exit_code(results: Sequence[BatchResult]) -> int:
    """Worst code wins: error over negative over success."""
    return max((result.exit_code for result in results), default=EXIT_OK)
