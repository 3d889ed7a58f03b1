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

def CBool : Type 1 := (R : Type 0) -> R -> R -> R;
def true : CBool := fun (R : Type 0) (t : R) (f : R) => t;
def false : CBool := fun (R : Type 0) (t : R) (f : R) => f;
def not : CBool -> CBool := fun (b : CBool) (R : Type 0) (t : R) (f : R) => b R f t;
main not false Nat 10 20;
