from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Callable, Generic, List, Optional, Sequence, TypeVar

from archimedean_converse.auto_config.environment import get_max_workers
from archimedean_converse.auto_config.logging_config import logger

T = TypeVar("T")
R = TypeVar("R")


@dataclass
class Outcome(Generic[T, R]):
    item: T
    result: Optional[R] = None
    error: Optional[BaseException] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def fan_out(
    func: Callable[[T], R],
    items: Sequence[T],
    max_workers: Optional[int] = None,
    label: str = "task",
) -> List[Outcome[T, R]]:
    """
    Run func over items on a thread pool and collect every outcome.

    Args:
        func: Work function, called once per item
        items: Inputs; the returned list follows their order
        max_workers: Pool size, defaults to MAX_WORKERS from the config
        label: Name used in log lines

    Returns:
        One Outcome per item; exceptions are captured, not raised.
    """
    max_workers = max_workers or get_max_workers()
    outcomes: List[Optional[Outcome[T, R]]] = [None] * len(items)
    logger.info(f"Running {len(items)} {label} item(s) on {max_workers} worker(s)")

    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        futures = {executor.submit(func, item): index for index, item in enumerate(items)}
        for future in as_completed(futures):
            index = futures[future]
            try:
                outcomes[index] = Outcome(items[index], result=future.result())
            except Exception as e:
                logger.warning(f"{label} failed for {items[index]}: {e}")
                outcomes[index] = Outcome(items[index], error=e)
    return outcomes  # type: ignore[return-value]
