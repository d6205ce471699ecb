// Context-menu chrome.  The engine names the object (tag + id path) and
// executes whatever entry the user picks; nothing here knows geometry.

import { MenuCommand, MenuMessage, MenuRequest } from "./protocol.js"

export const MENU_ENTRIES: { command: MenuCommand; label: string }[] = [
  { command: "hide", label: "Hide" },
  { command: "unveil", label: "Unveil" },
  { command: "fix", label: "Fix" },
  { command: "unfix", label: "Unfix" },
  { command: "level-up", label: "Level up" },
  { command: "level-down", label: "Level down" },
  { command: "level-top", label: "Level top" },
  { command: "level-bottom", label: "Level bottom" },
  { command: "duplicate", label: "Duplicate" },
  { command: "delete", label: "Delete" },
  { command: "save-object", label: "Save object" },
  { command: "restore-at", label: "Restore here" },
  { command: "save-view", label: "Save view" },
  { command: "load-view", label: "Load view" },
  { command: "default-view", label: "Default view" },
]

export function menuMessage(
  request: MenuRequest,
  command: MenuCommand,
  record?: string,
): MenuMessage {
  const msg: MenuMessage = { op: "menu", command, path: request.path }
  if (command === "restore-at") {
    if (record === undefined) throw new Error("restore-at needs a saved record")
    msg.record = record
    // the menu corner anchors the restored object
    msg.point = request.point
  }
  return msg
}
