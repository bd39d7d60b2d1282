"""
Publish/subscribe event bus.

Components announce the start, completion and failure of their stages on
the bus; the command line subscribes to print progress in verbose mode and
tests subscribe to observe pipeline order.
"""

from typing import Any, Callable, Dict, List, Tuple
import logging

from .exceptions import EventError

logger = logging.getLogger(__name__)

Callback = Callable[[str, Any], None]


class EventBus:
    """
    Central event bus.

    Subscribers are called synchronously in subscription order. A subscriber
    that raises is logged and skipped; it never aborts a pipeline.

    Attributes:
        _subscribers: event name -> callbacks.
        _history: (event name, payload) pairs, kept when record=True.
    """

    def __init__(self, record: bool = False) -> None:
        self._subscribers: Dict[str, List[Callback]] = {}
        self._record = record
        self._history: List[Tuple[str, Any]] = []
        logger.debug("EventBus initialized")

    def subscribe(self, event_name: str, callback: Callback) -> None:
        """
        Subscribe to an event.

        Raises:
            EventError: If the callback is not callable.

        Example:
            >>> bus = EventBus()
            >>> bus.subscribe("tdualize.complete", lambda name, data: None)
        """
        if not callable(callback):
            raise EventError(f"Callback must be callable, got {type(callback)}")
        self._subscribers.setdefault(event_name, []).append(callback)
        logger.debug(f"Subscriber added for event: {event_name}")

    def unsubscribe(self, event_name: str, callback: Callback) -> None:
        """
        Remove a subscription.

        Raises:
            EventError: If the event or callback is not found.
        """
        if event_name not in self._subscribers:
            raise EventError(f"No subscribers for event: {event_name}")
        try:
            self._subscribers[event_name].remove(callback)
        except ValueError:
            raise EventError(f"Callback not found for event: {event_name}")
        if not self._subscribers[event_name]:
            del self._subscribers[event_name]
        logger.debug(f"Subscriber removed from event: {event_name}")

    def publish(self, event_name: str, event_data: Any = None) -> None:
        """Deliver an event to every subscriber of its exact name and of "*"."""
        logger.debug(f"Publishing event: {event_name}")
        if self._record:
            self._history.append((event_name, event_data))

        callbacks = self._subscribers.get(event_name, []) + self._subscribers.get("*", [])
        for callback in callbacks:
            try:
                callback(event_name, event_data)
            except Exception as e:
                logger.error(f"Error in callback for event {event_name}: {e}", exc_info=True)

    def get_subscribers(self, event_name: str) -> List[Callback]:
        return list(self._subscribers.get(event_name, []))

    @property
    def history(self) -> List[Tuple[str, Any]]:
        """Published events in order (empty unless the bus records)."""
        return list(self._history)

    def clear(self) -> None:
        """Clear all subscribers and recorded history."""
        self._subscribers.clear()
        self._history.clear()
        logger.debug("EventBus cleared")
