-- Copyright 2026 The ccdefun Authors. All Rights Reserved.
--
-- Licensed under the Apache License, Version 2.0 (the "License");
-- you may not use this file except in compliance with the License.
-- You may obtain a copy of the License at
--
--     http://www.apache.org/licenses/LICENSE-2.0
--
-- Unless required by applicable law or agreed to in writing, software
-- distributed under the License is distributed on an "AS IS" BASIS,
-- WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
-- See the License for the specific language governing permissions and
-- limitations under the License.

-- Church numerals, read back into Nat.
def CNat : Type 1 := (R : Type 0) -> (R -> R) -> R -> R;
def zero : CNat := fun (R : Type 0) (s : R -> R) (z : R) => z;
def succ : CNat -> CNat
  := fun (n : CNat) (R : Type 0) (s : R -> R) (z : R) => s (n R s z);
def plus : CNat -> CNat -> CNat
  := fun (m : CNat) (n : CNat) (R : Type 0) (s : R -> R) (z : R) => m R s (n R s z);
def toNat : CNat -> Nat := fun (n : CNat) => n Nat (fun (k : Nat) => add k 1) 0;
main toNat (plus (succ (succ zero)) (succ zero));
